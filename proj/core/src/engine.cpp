#include "acri/engine.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace acri {

namespace {

std::string universe_diff(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  std::unordered_set<std::string> in_a(a.begin(), a.end());
  std::unordered_set<std::string> in_b(b.begin(), b.end());
  std::string diff;
  int listed = 0;
  for (const auto& label : a)
    if (!in_b.count(label) && listed < 4) {
      diff += (diff.empty() ? "" : ", ") + label;
      ++listed;
    }
  for (const auto& label : b)
    if (!in_a.count(label) && listed < 4) {
      diff += (diff.empty() ? "" : ", ") + label;
      ++listed;
    }
  if (diff.empty()) diff = "same labels in different order";
  return diff;
}

void require_same_universe(const FuzzySet& a, const FuzzySet& b,
                           const char* what) {
  if (!a.same_universe(b))
    detail::fail(std::string(what) + ": universe mismatch (" +
                 universe_diff(a.universe(), b.universe()) + ")");
}

}  // namespace

FuzzySet::FuzzySet(std::vector<std::string> universe,
                   std::vector<double> memberships)
    : universe_(std::move(universe)), memberships_(std::move(memberships)) {
  if (universe_.empty()) detail::fail("fuzzy set universe must be nonempty");
  if (universe_.size() != memberships_.size())
    detail::fail("fuzzy set: universe and membership lists differ in length");
  std::unordered_set<std::string> seen;
  for (const auto& label : universe_)
    if (!seen.insert(label).second)
      detail::fail("fuzzy set: duplicate universe label '" + label + "'");
  for (const double m : memberships_) (void)UnitValue(m);
}

bool FuzzySet::is_normal() const {
  return std::find(memberships_.begin(), memberships_.end(), 1.0) !=
         memberships_.end();
}

bool FuzzySet::same_universe(const FuzzySet& other) const {
  return universe_ == other.universe_;
}

FuzzySet product_set(const FuzzySet& d1, const FuzzySet& d2,
                     const Aggregator& combiner) {
  if (combiner(1.0, 0.0) != 0.0 || combiner(0.0, 1.0) != 0.0)
    detail::fail("product combiner must be a conjunctor, got " +
                 combiner.describe());
  for (const double t : detail::validation_grid(11))
    if (!near(combiner(1.0, t), t, 1e-9) || !near(combiner(t, 1.0), t, 1e-9))
      detail::fail("product combiner must have neutral element 1, got " +
                   combiner.describe());
  std::vector<std::string> labels;
  std::vector<double> values;
  labels.reserve(d1.size() * d2.size());
  values.reserve(d1.size() * d2.size());
  for (std::size_t i = 0; i < d1.size(); ++i)
    for (std::size_t j = 0; j < d2.size(); ++j) {
      labels.push_back(d1.universe()[i] + "|" + d2.universe()[j]);
      values.push_back(clamp01(combiner(d1[i], d2[j])));
    }
  return FuzzySet(std::move(labels), std::move(values));
}

FuzzySet product_set(const FuzzySet& d1, const FuzzySet& d2) {
  return product_set(d1, d2, Aggregator::minimum());
}

FuzzySet fmp_infer(const Aggregator& a, const Implication& i, const Rule& rule,
                   const FuzzySet& input) {
  require_same_universe(input, rule.antecedent, "fmp");
  if (!rule.antecedent.is_normal())
    warn("fmp: rule antecedent is not normal");
  if (!input.is_normal()) warn("fmp: input is not normal");

  const FuzzySet& d = rule.antecedent;
  const FuzzySet& b = rule.consequent;
  std::vector<double> out(b.size(), 0.0);
  for (std::size_t y = 0; y < b.size(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < d.size(); ++x)
      best = std::max(best, a(input[x], i(d[x], b[y])));
    out[y] = clamp01(best);
  }
  return FuzzySet(b.universe(), std::move(out));
}

FuzzySet fmt_infer(const Aggregator& a, const Implication& i, const Rule& rule,
                   const FuzzySet& input) {
  require_same_universe(input, rule.consequent, "fmt");
  if (!rule.consequent.is_normal())
    warn("fmt: rule consequent is not normal");

  const FuzzySet& d = rule.antecedent;
  const FuzzySet& b = rule.consequent;
  std::vector<double> out(d.size(), 0.0);
  for (std::size_t x = 0; x < d.size(); ++x) {
    double best = 0.0;
    for (std::size_t y = 0; y < b.size(); ++y)
      best = std::max(best, a(input[y], i(d[x], b[y])));
    out[x] = clamp01(best);
  }
  return FuzzySet(d.universe(), std::move(out));
}

double distance(const FuzzySet& d1, const FuzzySet& d2, double p) {
  require_same_universe(d1, d2, "distance");
  if (!(p >= 1.0)) detail::fail("distance needs p >= 1");
  double sum = 0.0;
  for (std::size_t k = 0; k < d1.size(); ++k)
    sum += std::pow(std::abs(d1[k] - d2[k]), p);
  return std::pow(sum, 1.0 / p);
}

FuzzySet complement(const FuzzySet& d, const Negation& n) {
  std::vector<double> out(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) out[k] = clamp01(n(d[k]));
  return FuzzySet(d.universe(), std::move(out));
}

}  // namespace acri
