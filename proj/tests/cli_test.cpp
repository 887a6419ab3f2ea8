#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ACRI_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) {
  return std::string(ACRI_DATA_DIR) + "/" + rel;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("infer runs the bundled apple scenario") {
  auto r = run("infer --mode fmp --scenario " +
               data("scenarios/example-6-2.json") +
               " --out /tmp/acri_cli_test_out.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("matches expected output") != std::string::npos);
  const std::string doc = slurp("/tmp/acri_cli_test_out.json");
  CHECK(doc.find("0.37") != std::string::npos);
  CHECK(doc.find("0.28") != std::string::npos);

  auto blown = run("infer --mode fmp --scenario " +
                   data("scenarios/example-6-2-dtop.json"));
  CHECK(blown.exit_code == 0);

  auto fmt = run("infer --mode fmt --scenario " +
                 data("scenarios/fmt-lukasiewicz.json"));
  CHECK(fmt.exit_code == 0);
}

TEST_CASE("infer output documents are byte-identical across runs") {
  const std::string args =
      "infer --mode fmp --scenario " + data("scenarios/example-6-2.json");
  auto first = run(args);
  auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("infer rejects invalid scenarios with exit 2") {
  std::ofstream bad("/tmp/acri_cli_bad_scenario.json");
  bad << R"({
    "rule": {
      "antecedent": {"universe": ["u1"], "memberships": [1]},
      "consequent": {"universe": ["v1"], "memberships": [1]}
    },
    "input": {"universe": ["w1"], "memberships": [1]},
    "connectives": {"aggregator": {"family": "min"},
                    "implication": {"family": "lukasiewicz"}}
  })";
  bad.close();
  auto r = run("infer --mode fmp --scenario /tmp/acri_cli_bad_scenario.json");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("universe mismatch") != std::string::npos);

  auto missing = run("infer --mode fmp --scenario /tmp/no_such_file.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("infer reports tolerance failures with exit 1 and per-element diffs") {
  std::ofstream f("/tmp/acri_cli_mismatch.json");
  f << R"({
    "rule": {
      "antecedent": {"universe": ["u1", "u2"], "memberships": [1, 0.5]},
      "consequent": {"universe": ["v1"], "memberships": [1]}
    },
    "input": {"universe": ["u1", "u2"], "memberships": [1, 0.5]},
    "connectives": {"aggregator": {"family": "lukasiewicz-tnorm"},
                    "implication": {"family": "lukasiewicz"}},
    "expected_output": {"universe": ["v1"], "memberships": [0.25]},
    "tolerance": 1e-6
  })";
  f.close();
  auto r = run("infer --mode fmp --scenario /tmp/acri_cli_mismatch.json");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("diff") != std::string::npos);
}

TEST_CASE("check certifies the Lukasiewicz pair and refutes the blown pair") {
  auto good = run("check --ops " + data("operators/lukasiewicz-pair.json") +
                  " --laws ac,dac,cpn --report /tmp/acri_cli_report.json");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("ac,pass,0") != std::string::npos);
  CHECK(good.output.find("dac,pass,0") != std::string::npos);
  CHECK(good.output.find("cpn,pass,0") != std::string::npos);
  const std::string report = slurp("/tmp/acri_cli_report.json");
  CHECK(report.find("\"grid\": \"uniform-101[0,1]\"") != std::string::npos);

  auto bad = run("check --ops " + data("operators/dtop-reichenbach.json") +
                 " --laws ac");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("ac,fail") != std::string::npos);
  CHECK(bad.output.find("(") != std::string::npos);  // witness coordinates

  auto unknown = run("check --ops " + data("operators/lukasiewicz-pair.json") +
                     " --laws bogus");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("check runs seeded axiom suites deterministically") {
  const std::string args = "check --ops " +
                           data("operators/goguen-product.json") +
                           " --laws a5,a2 --seed 42 --instances 5";
  auto first = run(args);
  auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("build-agg tabulates constructions and their oracle deviation") {
  auto r = run("build-agg --implication " + data("operators/reichenbach.json") +
               " --method numeric-infimum --grid 101 --out /tmp/acri_agg.csv");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp("/tmp/acri_agg.csv");
  CHECK(csv.find("x,y,value") == 0);
  CHECK(csv.find("0.900000,0.370000,0.300000") != std::string::npos);

  auto c = run("build-agg --implication " +
               data("operators/f-implication-neg-log.json") +
               " --method closed-form-f --out /tmp/acri_agg2.csv");
  CHECK(c.exit_code == 0);
  CHECK(c.output.find("max deviation vs numeric infimum") != std::string::npos);
  // the reported deviation stays within the acceptance budget
  const auto pos = c.output.find("infimum: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(c.output.substr(pos + 9)) <= 1e-4);

  auto w = run("build-agg --implication " +
               data("operators/probabilistic-s-w.json") +
               " --method closed-form-probabilistic-s --out /tmp/acri_agg3.csv");
  CHECK(w.exit_code == 0);
  CHECK(slurp("/tmp/acri_agg3.csv").find("0.300000,0.600000,0.000000") !=
        std::string::npos);

  auto wrong = run("build-agg --implication " +
                   data("operators/reichenbach.json") +
                   " --method closed-form-tpower --out /tmp/acri_agg4.csv");
  CHECK(wrong.exit_code == 2);
}

TEST_CASE("classify-demo labels the three reference entities") {
  auto e1 = run("classify-demo --attr1 11 --attr2 3");
  CHECK(e1.exit_code == 0);
  CHECK(e1.output.find("class: N") == 0);
  CHECK(e1.output.find("firing") != std::string::npos);

  auto e2 = run("classify-demo --attr1 20 --attr2 2");
  CHECK(e2.output.find("class: M") == 0);

  auto e3 = run("classify-demo --attr1 22 --attr2 8");
  CHECK(e3.output.find("class: Y") == 0);

  auto with_config = run("classify-demo --attr1 11 --attr2 3 --config " +
                         data("classify_demo_config.json"));
  CHECK(with_config.output.find("class: N") == 0);

  auto out_of_range = run("classify-demo --attr1 99 --attr2 3");
  CHECK(out_of_range.exit_code == 2);
}
