#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acri/conformance.hpp"
#include "acri/constructions.hpp"
#include "acri/json_io.hpp"
#include "classify_demo.hpp"

namespace {

using namespace acri;

constexpr int kExitPass = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;

void print_set(const FuzzySet& s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    std::printf("  %-16s %.6f\n", s.universe()[k].c_str(), s[k]);
}

int run_infer(const std::string& scenario_path, const std::string& mode,
              const std::string& out_path) {
  const Scenario s = load_scenario_file(scenario_path);
  FuzzySet result = mode == "fmt"
                        ? fmt_infer(s.aggregator, s.implication, s.rule, s.input)
                        : fmp_infer(s.aggregator, s.implication, s.rule, s.input);

  const std::string doc = fuzzy_set_to_json(result);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << doc;
    std::printf("%s (%s) inferred:\n", s.name.c_str(), mode.c_str());
    print_set(result);
  }

  if (s.expected_output) {
    const FuzzySet& want = *s.expected_output;
    if (!want.same_universe(result)) {
      std::cerr << "expected output lives on a different universe than the "
                << mode << " result\n";
      return kExitUsage;
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < result.size(); ++k)
      worst = std::max(worst, std::abs(result[k] - want[k]));
    if (worst > s.tolerance) {
      std::printf("expected-output mismatch (tolerance %g):\n", s.tolerance);
      for (std::size_t k = 0; k < result.size(); ++k)
        std::printf("  %-16s got %.6f want %.6f diff %.3e\n",
                    result.universe()[k].c_str(), result[k], want[k],
                    std::abs(result[k] - want[k]));
      return kExitLawFailure;
    }
    std::printf("matches expected output within %g\n", s.tolerance);
  }
  return kExitPass;
}

int run_check(const std::string& ops_path, const std::string& laws_csv,
              std::size_t grid_n, unsigned long long seed,
              std::size_t instance_count, const std::string& report_path) {
  const OperatorTriple ops = load_operators_file(ops_path);
  const Grid grid = Grid::uniform(grid_n);

  std::vector<std::string> laws;
  std::stringstream ss(laws_csv);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) laws.push_back(item);
  if (laws.empty()) {
    std::cerr << "no laws requested\n";
    return kExitUsage;
  }

  const auto need = [&](const char* what, const auto& field) -> bool {
    if (!field) {
      std::cerr << "operators file lacks the " << what
                << " required by the requested laws\n";
      return false;
    }
    return true;
  };

  std::vector<CheckReport> reports;
  std::set<Axiom> axioms;
  for (const auto& law : laws) {
    if (law == "ac") {
      if (!need("aggregator", ops.aggregator) ||
          !need("implication", ops.implication))
        return kExitUsage;
      reports.push_back(check_ac(*ops.aggregator, *ops.implication, grid));
    } else if (law == "dac") {
      if (!need("aggregator", ops.aggregator) ||
          !need("implication", ops.implication) ||
          !need("negation", ops.negation))
        return kExitUsage;
      reports.push_back(
          check_dac(*ops.aggregator, *ops.implication, *ops.negation, grid));
    } else if (law == "lia") {
      if (!need("aggregator", ops.aggregator) ||
          !need("implication", ops.implication))
        return kExitUsage;
      reports.push_back(check_lia(*ops.aggregator, *ops.implication, grid));
    } else if (law == "cpn") {
      if (!need("implication", ops.implication) ||
          !need("negation", ops.negation))
        return kExitUsage;
      reports.push_back(check_cpn(*ops.implication, *ops.negation, grid));
    } else if (auto ax = parse_axiom(law)) {
      axioms.insert(*ax);
    } else {
      std::cerr << "unknown law '" << law << "'\n";
      return kExitUsage;
    }
  }

  if (!axioms.empty()) {
    if (!need("aggregator", ops.aggregator) ||
        !need("implication", ops.implication) ||
        !need("negation", ops.negation))
      return kExitUsage;
    std::mt19937_64 rng(seed);
    RandomRuleOptions opt;
    opt.force_zero_consequent = true;      // complement inputs stay normal
    opt.force_interior_consequent = true;  // failures carry witnesses
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<AxiomInstance> instances;
    for (std::size_t k = 0; k < instance_count; ++k) {
      Rule rule = make_random_rule(rng, opt);
      std::optional<FuzzySet> input, input2;
      if (axioms.count(Axiom::A2)) {
        std::vector<double> shrunk(rule.antecedent.memberships());
        for (auto& v : shrunk) v = snap01(v * unif(rng));
        input = FuzzySet(rule.antecedent.universe(), shrunk);
        input2 = rule.antecedent;
      }
      instances.push_back({std::move(rule), std::move(input),
                           std::move(input2),
                           "instance " + std::to_string(k)});
    }
    auto axiom_reports = check_axioms(*ops.aggregator, *ops.implication,
                                      *ops.negation, instances, axioms);
    for (auto& r : axiom_reports) {
      r.seed = seed;
      reports.push_back(std::move(r));
    }
  }

  bool all_pass = true;
  for (const auto& r : reports) {
    std::cout << r.csv_line() << "\n";
    all_pass &= r.pass;
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write " << report_path << "\n";
      return kExitUsage;
    }
    out << reports_to_json(reports, seed, grid.describe());
  }
  return all_pass ? kExitPass : kExitLawFailure;
}

int run_build_agg(const std::string& implication_path, const std::string& method,
                  std::size_t grid_n, const std::string& out_path) {
  const ImplicationSpec spec = load_implication_file(implication_path);

  std::optional<Aggregator> built;
  std::string inapplicable;
  if (method == "numeric-infimum") {
    built = aggregator_from_implication(spec.implication);
  } else if (method == "closed-form-f") {
    if (spec.family == "f-implication" && spec.generator)
      built = aggregator_for_f_implication(*spec.generator);
    else if (spec.family == "reichenbach")
      built = aggregator_for_f_implication(Generator::one_minus_x());
    else
      inapplicable = "needs an f-implication";
  } else if (method == "closed-form-g") {
    if (spec.family == "g-implication" && spec.generator)
      built = aggregator_for_g_implication(*spec.generator);
    else
      inapplicable = "needs a g-implication";
  } else if (method == "closed-form-tpower") {
    if (spec.family == "t-power" && spec.generator)
      built = aggregator_for_tpower(*spec.generator);
    else
      inapplicable = "needs a power-based implication of an Archimedean t-norm";
  } else if (method == "closed-form-ordinal-sum-sn") {
    if (spec.family == "an-implication" && spec.has_ordinal_sum && spec.negation)
      built = aggregator_for_ordinal_sum_sn(spec.summands, *spec.negation);
    else if (spec.family == "lukasiewicz")
      built = aggregator_for_ordinal_sum_sn({{0.0, 1.0, Generator::identity()}},
                                            Negation::standard());
    else
      inapplicable = "needs an (A,N)-implication over an ordinal-sum t-conorm";
  } else if (method == "closed-form-probabilistic") {
    if (spec.family == "probabilistic" && spec.copula_generator)
      built = aggregator_for_probabilistic(*spec.copula_generator, false);
    else
      inapplicable = "needs a probabilistic implication of an Archimedean copula";
  } else if (method == "closed-form-probabilistic-s") {
    if (spec.family == "probabilistic-s" && spec.copula_generator)
      built = aggregator_for_probabilistic(*spec.copula_generator, true);
    else
      inapplicable =
          "needs a probabilistic S-implication of an Archimedean copula";
  } else if (method == "star-extension") {
    built = star_extension(aggregator_from_implication(spec.implication));
  } else {
    std::cerr << "unknown method '" << method << "'\n";
    return kExitUsage;
  }
  if (!built) {
    std::cerr << "method " << method << " does not apply to a " << spec.family
              << " document: " << inapplicable << "\n";
    return kExitUsage;
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitUsage;
  }
  const Grid grid = Grid::uniform(grid_n);
  out << "x,y,value\n";
  char line[96];
  for (const double x : grid.points())
    for (const double y : grid.points()) {
      std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f\n", x, y, (*built)(x, y));
      out << line;
    }

  if (method != "numeric-infimum") {
    // deviation against the generic infimum construction, when it exists
    try {
      const Aggregator oracle = aggregator_from_implication(spec.implication);
      double worst = 0.0;
      for (const double x : grid.points())
        for (const double y : grid.points())
          worst = std::max(worst, std::abs((*built)(x, y) - oracle(x, y)));
      std::printf("max deviation vs numeric infimum: %.3e\n", worst);
    } catch (const std::exception&) {
      std::printf("numeric infimum unavailable for this implication\n");
    }
  }
  std::printf("wrote %zux%zu tabulation to %s\n", grid.size(), grid.size(),
              out_path.c_str());
  return kExitPass;
}

int run_classify(double attr1, double attr2, const std::string& config_path) {
  const demo::ClassifierConfig config = config_path.empty()
                                            ? demo::default_config()
                                            : demo::load_config(config_path);
  const demo::Classification result = demo::classify(config, attr1, attr2);
  std::printf("class: %s\n", result.klass.c_str());
  if (result.tie)
    std::printf("tie broken by class order (%s first)\n",
                config.classes.front().c_str());
  std::printf("trace:\n");
  for (std::size_t k = 0; k < config.rules.size(); ++k)
    std::printf("  rule %zu [%s AND %s -> %s]: firing %.6f\n", k + 1,
                config.rules[k].label1.c_str(), config.rules[k].label2.c_str(),
                config.rules[k].klass.c_str(), result.rule_firings[k]);
  std::printf("scores:");
  for (std::size_t k = 0; k < config.classes.size(); ++k)
    std::printf(" %s=%.6f", config.classes[k].c_str(), result.class_scores[k]);
  std::printf("\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aggregation-based compositional fuzzy inference toolkit"};
  app.require_subcommand(1);

  std::string scenario_path, mode = "fmp", out_path;
  auto* infer = app.add_subcommand("infer", "run a scenario file");
  infer->add_option("--scenario", scenario_path, "scenario JSON file")
      ->required();
  infer->add_option("--mode", mode, "fmp or fmt")
      ->check(CLI::IsMember({"fmp", "fmt"}));
  infer->add_option("--out", out_path, "write the inferred set as JSON here");

  std::string ops_path, laws = "ac", report_path;
  std::size_t grid_n = 101, instances = 20;
  unsigned long long seed = 1;
  auto* check = app.add_subcommand("check", "certify or refute laws");
  check->add_option("--ops", ops_path, "operators JSON file")->required();
  check->add_option("--laws", laws, "comma list: ac,dac,lia,cpn,a1..a8");
  check->add_option("--grid", grid_n, "uniform grid size")
      ->check(CLI::Range(2, 100000));
  check->add_option("--seed", seed, "seed for random axiom instances");
  check->add_option("--instances", instances, "random instances per axiom");
  check->add_option("--report", report_path, "write the JSON report here");

  std::string impl_path, method = "numeric-infimum", csv_path;
  std::size_t agg_grid = 101;
  auto* build =
      app.add_subcommand("build-agg", "tabulate a constructed aggregator");
  build->add_option("--implication", impl_path, "implication JSON file")
      ->required();
  build->add_option("--method", method,
                    "numeric-infimum | closed-form-f | closed-form-g | "
                    "closed-form-tpower | closed-form-ordinal-sum-sn | "
                    "closed-form-probabilistic | closed-form-probabilistic-s | "
                    "star-extension");
  build->add_option("--grid", agg_grid, "tabulation grid size")
      ->check(CLI::Range(2, 10000));
  build->add_option("--out", csv_path, "output CSV file")->required();

  double attr1 = 0.0, attr2 = 0.0;
  std::string config_path;
  auto* classify =
      app.add_subcommand("classify-demo", "bundled two-attribute classifier");
  classify->add_option("--attr1", attr1, "first attribute reading")->required();
  classify->add_option("--attr2", attr2, "second attribute reading")
      ->required();
  classify->add_option("--config", config_path,
                       "membership configuration JSON (built-in by default)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (infer->parsed()) return run_infer(scenario_path, mode, out_path);
    if (check->parsed())
      return run_check(ops_path, laws, grid_n, seed, instances, report_path);
    if (build->parsed())
      return run_build_agg(impl_path, method, agg_grid, csv_path);
    if (classify->parsed()) return run_classify(attr1, attr2, config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
