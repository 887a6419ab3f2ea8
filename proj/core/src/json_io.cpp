#include "acri/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "acri/constructions.hpp"

namespace acri {

namespace {

using nlohmann::json;

struct Ctx {
  const json* table = nullptr;  // named operator definitions
  std::string path;             // document location for error messages
  int depth = 0;

  Ctx at(const std::string& key) const {
    return Ctx{table, path.empty() ? key : path + "." + key, depth};
  }
  [[noreturn]] void fail(const std::string& what) const {
    detail::fail((path.empty() ? std::string("document") : path) + ": " + what);
  }
};

Negation build_negation(const json& j, Ctx ctx);
Aggregator build_aggregator(const json& j, Ctx ctx);
Implication build_implication(const json& j, Ctx ctx);

const json& resolve(const json& j, Ctx& ctx) {
  if (!j.is_string()) return j;
  if (ctx.depth >= 32) ctx.fail("operator references nest too deep");
  if (!ctx.table || !ctx.table->contains(j.get<std::string>()))
    ctx.fail("unknown operator reference '" + j.get<std::string>() + "'");
  ++ctx.depth;
  return ctx.table->at(j.get<std::string>());
}

std::string family_of(const json& j, const Ctx& ctx) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    ctx.fail("expected an operator object with a \"family\" tag");
  return j.at("family").get<std::string>();
}

double number_field(const json& j, const char* key, const Ctx& ctx) {
  if (!j.contains(key) || !j.at(key).is_number())
    ctx.fail(std::string("missing numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

double number_field_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<double>();
}

std::vector<double> number_array(const json& j, const char* key,
                                 const Ctx& ctx) {
  if (!j.contains(key) || !j.at(key).is_array())
    ctx.fail(std::string("missing array field \"") + key + "\"");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) ctx.fail(std::string(key) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Generator build_generator(const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  if (!j.is_object() || !j.contains("form"))
    ctx.fail("expected a generator object with a \"form\" tag");
  const std::string form = j.at("form").get<std::string>();
  if (form == "one-minus-x") return Generator::one_minus_x();
  if (form == "neg-log") return Generator::neg_log();
  if (form == "identity") return Generator::identity();
  if (form == "neg-log-one-minus") return Generator::neg_log_one_minus();
  if (form == "power") return Generator::power(number_field(j, "exponent", ctx));
  if (form == "one-minus-power")
    return Generator::one_minus_power(number_field(j, "exponent", ctx));
  if (form == "clayton") return Generator::clayton(number_field(j, "theta", ctx));
  if (form == "logit") return Generator::logit();
  ctx.fail("unknown generator form '" + form + "'");
}

Automorphism build_automorphism(const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  const std::string family = family_of(j, ctx);
  if (family == "identity") return Automorphism::identity();
  if (family == "power")
    return Automorphism::power(number_field(j, "exponent", ctx));
  if (family == "tabulated")
    return Automorphism::tabulated(number_array(j, "x", ctx),
                                   number_array(j, "value", ctx));
  ctx.fail("unknown automorphism family '" + family + "'");
}

Copula build_copula(const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  const std::string family = family_of(j, ctx);
  if (family == "product") return Copula::product();
  if (family == "lukasiewicz") return Copula::lukasiewicz();
  if (family == "archimedean")
    return Copula::archimedean(build_generator(j.at("generator"),
                                               ctx.at("generator")));
  ctx.fail("unknown copula family '" + family + "'");
}

/// Additive generator of a copula object, when one exists.
std::optional<Generator> copula_additive_generator(const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  const std::string family = family_of(j, ctx);
  if (family == "product") return Generator::neg_log();
  if (family == "lukasiewicz") return Generator::one_minus_x();
  if (family == "archimedean")
    return build_generator(j.at("generator"), ctx.at("generator"));
  return std::nullopt;
}

std::vector<Aggregator::OrdinalSummand> build_summands(const json& j,
                                                       Ctx ctx) {
  if (!j.is_array()) ctx.fail("summands must be an array");
  std::vector<Aggregator::OrdinalSummand> out;
  std::size_t k = 0;
  for (const auto& item : j) {
    Ctx sub = ctx.at("summands[" + std::to_string(k++) + "]");
    out.push_back(Aggregator::OrdinalSummand{
        number_field(item, "lo", sub), number_field(item, "hi", sub),
        build_generator(item.at("generator"), sub.at("generator"))});
  }
  return out;
}

/// Ordinal-sum view of a t-conorm aggregator object, used by the
/// closed-form construction for (A,N)-implications.
std::optional<std::vector<Aggregator::OrdinalSummand>> tconorm_summands(
    const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  const std::string family = family_of(j, ctx);
  if (family == "ordinal-sum-tconorm")
    return build_summands(j.at("summands"), ctx);
  if (family == "lukasiewicz-tconorm")
    return std::vector<Aggregator::OrdinalSummand>{
        {0.0, 1.0, Generator::identity()}};
  if (family == "probabilistic-sum")
    return std::vector<Aggregator::OrdinalSummand>{
        {0.0, 1.0, Generator::neg_log_one_minus()}};
  if (family == "max") return std::vector<Aggregator::OrdinalSummand>{};
  return std::nullopt;
}

Aggregator build_aggregator(const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  const std::string family = family_of(j, ctx);
  if (family == "min") return Aggregator::minimum();
  if (family == "product") return Aggregator::product();
  if (family == "lukasiewicz-tnorm") return Aggregator::lukasiewicz_tnorm();
  if (family == "max") return Aggregator::maximum();
  if (family == "probabilistic-sum") return Aggregator::probabilistic_sum();
  if (family == "lukasiewicz-tconorm") return Aggregator::lukasiewicz_tconorm();
  if (family == "greatest-disjunctor") return Aggregator::greatest_disjunctor();
  if (family == "smallest-disjunctor") return Aggregator::smallest_disjunctor();
  if (family == "wqam")
    return Aggregator::wqam(number_field(j, "lambda", ctx),
                            build_generator(j.at("generator"),
                                            ctx.at("generator")));
  if (family == "representable")
    return Aggregator::representable(
        build_generator(j.at("generator"), ctx.at("generator")));
  if (family == "ordinal-sum-tconorm")
    return Aggregator::ordinal_sum_tconorm(
        build_summands(j.at("summands"), ctx));
  if (family == "conjugated")
    return Aggregator::conjugated(build_aggregator(j.at("base"), ctx.at("base")),
                                  build_automorphism(j.at("phi"), ctx.at("phi")));
  if (family == "dual")
    return Aggregator::dual(build_aggregator(j.at("base"), ctx.at("base")),
                            build_negation(j.at("negation"),
                                           ctx.at("negation")));
  if (family == "tabulated")
    return Aggregator::tabulated(number_array(j, "x", ctx),
                                 number_array(j, "y", ctx),
                                 number_array(j, "value", ctx));
  if (family == "from-implication")
    return aggregator_from_implication(
        build_implication(j.at("implication"), ctx.at("implication")),
        number_field_or(j, "tol", 1e-6));
  if (family == "closed-form-f")
    return aggregator_for_f_implication(
        build_generator(j.at("generator"), ctx.at("generator")));
  if (family == "closed-form-g")
    return aggregator_for_g_implication(
        build_generator(j.at("generator"), ctx.at("generator")));
  if (family == "closed-form-tpower")
    return aggregator_for_tpower(
        build_generator(j.at("generator"), ctx.at("generator")));
  if (family == "closed-form-ordinal-sum-sn")
    return aggregator_for_ordinal_sum_sn(
        build_summands(j.at("summands"), ctx),
        build_negation(j.at("negation"), ctx.at("negation")));
  if (family == "closed-form-probabilistic" ||
      family == "closed-form-probabilistic-s") {
    auto gen = copula_additive_generator(j.at("copula"), ctx.at("copula"));
    if (!gen) ctx.fail("copula has no additive generator");
    return aggregator_for_probabilistic(*gen,
                                        family == "closed-form-probabilistic-s");
  }
  if (family == "star-extension")
    return star_extension(build_aggregator(j.at("base"), ctx.at("base")),
                          static_cast<int>(number_field_or(j, "refine", 1000)));
  ctx.fail("unknown aggregator family '" + family + "'");
}

Negation build_negation(const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  const std::string family = family_of(j, ctx);
  if (family == "bottom") return Negation::bottom();
  if (family == "top") return Negation::top();
  if (family == "standard") return Negation::standard();
  if (family == "conjugated")
    return Negation::conjugated(build_negation(j.at("base"), ctx.at("base")),
                                build_automorphism(j.at("phi"), ctx.at("phi")));
  if (family == "natural-of-implication")
    return natural_negation(
        build_implication(j.at("implication"), ctx.at("implication")));
  if (family == "natural-of-aggregator")
    return natural_negation(
        build_aggregator(j.at("aggregator"), ctx.at("aggregator")),
        number_field_or(j, "tol", 1e-6));
  if (family == "tabulated")
    return Negation::tabulated(number_array(j, "x", ctx),
                               number_array(j, "value", ctx));
  ctx.fail("unknown negation family '" + family + "'");
}

Implication build_implication(const json& raw, Ctx ctx) {
  const json& j = resolve(raw, ctx);
  const std::string family = family_of(j, ctx);
  if (family == "lukasiewicz") return Implication::lukasiewicz();
  if (family == "reichenbach") return Implication::reichenbach();
  if (family == "r-implication")
    return Implication::residual(
        build_aggregator(j.at("aggregator"), ctx.at("aggregator")));
  if (family == "an-implication")
    return Implication::an_implication(
        build_aggregator(j.at("aggregator"), ctx.at("aggregator")),
        build_negation(j.at("negation"), ctx.at("negation")));
  if (family == "ql-operation")
    return Implication::ql_operation(
        build_aggregator(j.at("a1"), ctx.at("a1")),
        build_aggregator(j.at("a2"), ctx.at("a2")),
        build_negation(j.at("negation"), ctx.at("negation")));
  if (family == "f-implication")
    return Implication::f_implication(
        build_generator(j.at("generator"), ctx.at("generator")));
  if (family == "g-implication")
    return Implication::g_implication(
        build_generator(j.at("generator"), ctx.at("generator")));
  if (family == "t-power") {
    const json& t = j.at("tnorm");
    if (t.is_string() && t.get<std::string>() == "min")
      return Implication::t_power_min();
    Ctx sub = ctx.at("tnorm");
    return Implication::t_power(build_generator(t.at("generator"),
                                                sub.at("generator")));
  }
  if (family == "probabilistic")
    return Implication::probabilistic(
        build_copula(j.at("copula"), ctx.at("copula")));
  if (family == "probabilistic-s")
    return Implication::probabilistic_s(
        build_copula(j.at("copula"), ctx.at("copula")));
  if (family == "meet")
    return meet(build_implication(j.at("left"), ctx.at("left")),
                build_implication(j.at("right"), ctx.at("right")));
  if (family == "join")
    return join(build_implication(j.at("left"), ctx.at("left")),
                build_implication(j.at("right"), ctx.at("right")));
  if (family == "conjugated")
    return conjugate(build_implication(j.at("base"), ctx.at("base")),
                     build_automorphism(j.at("phi"), ctx.at("phi")));
  if (family == "lower-contrapositivisation")
    return contrapositivise(build_implication(j.at("base"), ctx.at("base")),
                            build_negation(j.at("negation"), ctx.at("negation")),
                            ContrapositivisationSide::Lower);
  if (family == "upper-contrapositivisation")
    return contrapositivise(build_implication(j.at("base"), ctx.at("base")),
                            build_negation(j.at("negation"), ctx.at("negation")),
                            ContrapositivisationSide::Upper);
  if (family == "tabulated")
    return Implication::tabulated(number_array(j, "x", ctx),
                                  number_array(j, "y", ctx),
                                  number_array(j, "value", ctx));
  ctx.fail("unknown implication family '" + family + "'");
}

FuzzySet build_fuzzy_set(const json& j, Ctx ctx) {
  if (!j.is_object()) ctx.fail("expected a fuzzy set object");
  if (j.contains("product")) {
    const json& p = j.at("product");
    if (!p.is_array() || p.size() != 2)
      ctx.fail("\"product\" must hold exactly two fuzzy sets");
    FuzzySet d1 = build_fuzzy_set(p.at(0), ctx.at("product[0]"));
    FuzzySet d2 = build_fuzzy_set(p.at(1), ctx.at("product[1]"));
    Aggregator combiner = j.contains("combiner")
                              ? build_aggregator(j.at("combiner"),
                                                 ctx.at("combiner"))
                              : Aggregator::minimum();
    return product_set(d1, d2, combiner);
  }
  if (!j.contains("universe") || !j.contains("memberships"))
    ctx.fail("fuzzy set needs \"universe\" and \"memberships\"");
  std::vector<std::string> labels;
  for (const auto& l : j.at("universe")) {
    if (!l.is_string()) ctx.fail("universe labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<double> values = number_array(j, "memberships", ctx);
  try {
    return FuzzySet(std::move(labels), std::move(values));
  } catch (const std::exception& e) {
    ctx.fail(e.what());
  }
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    detail::fail(std::string("JSON parse error: ") + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Ctx root_ctx(const json& doc) {
  Ctx ctx;
  if (doc.is_object() && doc.contains("operators"))
    ctx.table = &doc.at("operators");
  return ctx;
}

Scenario build_scenario(const json& doc) {
  Ctx ctx = root_ctx(doc);
  if (!doc.is_object() || !doc.contains("rule") || !doc.contains("input") ||
      !doc.contains("connectives"))
    ctx.fail("scenario needs \"rule\", \"input\" and \"connectives\"");
  const json& rule = doc.at("rule");
  const json& conn = doc.at("connectives");

  Scenario s{
      doc.value("name", std::string("scenario")),
      Rule{build_fuzzy_set(rule.at("antecedent"), ctx.at("rule.antecedent")),
           build_fuzzy_set(rule.at("consequent"), ctx.at("rule.consequent"))},
      build_fuzzy_set(doc.at("input"), ctx.at("input")),
      build_aggregator(conn.at("aggregator"), ctx.at("connectives.aggregator")),
      build_implication(conn.at("implication"),
                        ctx.at("connectives.implication")),
      std::nullopt,
      std::nullopt,
      number_field_or(doc, "tolerance", 1e-9)};
  if (conn.contains("negation"))
    s.negation =
        build_negation(conn.at("negation"), ctx.at("connectives.negation"));
  if (doc.contains("expected_output")) {
    s.expected_output =
        build_fuzzy_set(doc.at("expected_output"), ctx.at("expected_output"));
    if (!s.expected_output->same_universe(s.rule.consequent) &&
        !s.expected_output->same_universe(s.rule.antecedent))
      ctx.at("expected_output")
          .fail("universe matches neither rule side, so no inference mode "
                "can produce it");
  }
  return s;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  return build_scenario(parse_text(json_text));
}

Scenario load_scenario_file(const std::string& path) {
  return parse_scenario(slurp(path));
}

OperatorTriple parse_operators(const std::string& json_text) {
  const json doc = parse_text(json_text);
  Ctx ctx = root_ctx(doc);
  OperatorTriple t;
  if (doc.contains("aggregator"))
    t.aggregator = build_aggregator(doc.at("aggregator"), ctx.at("aggregator"));
  if (doc.contains("implication"))
    t.implication =
        build_implication(doc.at("implication"), ctx.at("implication"));
  if (doc.contains("negation"))
    t.negation = build_negation(doc.at("negation"), ctx.at("negation"));
  return t;
}

OperatorTriple load_operators_file(const std::string& path) {
  return parse_operators(slurp(path));
}

ImplicationSpec parse_implication_spec(const std::string& json_text) {
  const json doc = parse_text(json_text);
  Ctx ctx = root_ctx(doc);
  const json* spec = &doc;
  if (doc.is_object() && doc.contains("implication")) {
    spec = &doc.at("implication");
    ctx = ctx.at("implication");
  }
  Ctx probe = ctx;
  const json& resolved = resolve(*spec, probe);

  ImplicationSpec out{build_implication(*spec, ctx),
                      family_of(resolved, probe),
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      {},
                      false};
  if (out.family == "f-implication" || out.family == "g-implication")
    out.generator = build_generator(resolved.at("generator"),
                                    probe.at("generator"));
  if (out.family == "t-power") {
    const json& t = resolved.at("tnorm");
    if (!(t.is_string() && t.get<std::string>() == "min"))
      out.generator = build_generator(t.at("generator"),
                                      probe.at("tnorm.generator"));
  }
  if (out.family == "probabilistic" || out.family == "probabilistic-s")
    out.copula_generator =
        copula_additive_generator(resolved.at("copula"), probe.at("copula"));
  if (out.family == "an-implication") {
    out.negation =
        build_negation(resolved.at("negation"), probe.at("negation"));
    auto summands = tconorm_summands(resolved.at("aggregator"),
                                     probe.at("aggregator"));
    if (summands) {
      out.summands = std::move(*summands);
      out.has_ordinal_sum = true;
    }
  }
  return out;
}

ImplicationSpec load_implication_file(const std::string& path) {
  return parse_implication_spec(slurp(path));
}

FuzzySet parse_fuzzy_set(const std::string& json_text) {
  return build_fuzzy_set(parse_text(json_text), Ctx{});
}

std::string fuzzy_set_to_json(const FuzzySet& set) {
  json j;
  j["universe"] = set.universe();
  j["memberships"] = set.memberships();
  return j.dump(2) + "\n";
}

std::string reports_to_json(std::span<const CheckReport> reports,
                            unsigned long long seed, const std::string& grid) {
  json j;
  j["seed"] = seed;
  j["grid"] = grid;
  j["reports"] = json::array();
  for (const auto& r : reports) {
    json e;
    e["law"] = r.law;
    e["verdict"] = r.pass ? "pass" : "fail";
    e["worst_violation"] = r.worst_violation;
    e["witness"] = r.witness;
    e["witness_note"] = r.witness_note;
    e["grid"] = r.grid;
    e["tolerance"] = r.tolerance;
    j["reports"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace acri
