#ifndef ACRI_JSON_IO_HPP
#define ACRI_JSON_IO_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acri/connectives.hpp"
#include "acri/engine.hpp"
#include "acri/generator.hpp"
#include "acri/implications.hpp"
#include "acri/report.hpp"

namespace acri {

/// Inference bundle: a rule, an input, connective choices and an optional
/// expected output for golden runs. See the repository README for the JSON
/// schema. Parse or validation problems throw std::invalid_argument with
/// the offending document location.
struct Scenario {
  std::string name;
  Rule rule;
  FuzzySet input;
  Aggregator aggregator;
  Implication implication;
  std::optional<Negation> negation;
  std::optional<FuzzySet> expected_output;
  double tolerance = 1e-9;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

/// Connectives named by a conformance-check document.
struct OperatorTriple {
  std::optional<Aggregator> aggregator;
  std::optional<Implication> implication;
  std::optional<Negation> negation;
};

OperatorTriple parse_operators(const std::string& json_text);
OperatorTriple load_operators_file(const std::string& path);

/// An implication together with the construction-relevant pieces of its
/// document (family tag, generators, summands), so callers can decide
/// which closed-form aggregator constructions apply.
struct ImplicationSpec {
  Implication implication;
  std::string family;
  std::optional<Generator> generator;         // f-/g-/t-power families
  std::optional<Generator> copula_generator;  // probabilistic families
  std::optional<Negation> negation;           // an-implication
  std::vector<Aggregator::OrdinalSummand> summands;  // ordinal-sum sources
  bool has_ordinal_sum = false;
};

ImplicationSpec parse_implication_spec(const std::string& json_text);
ImplicationSpec load_implication_file(const std::string& path);

FuzzySet parse_fuzzy_set(const std::string& json_text);

std::string fuzzy_set_to_json(const FuzzySet& set);
std::string reports_to_json(std::span<const CheckReport> reports,
                            unsigned long long seed, const std::string& grid);

}  // namespace acri

#endif
