#ifndef ACRI_ENGINE_HPP
#define ACRI_ENGINE_HPP

#include <string>
#include <vector>

#include "acri/connectives.hpp"
#include "acri/implications.hpp"
#include "acri/unit.hpp"

namespace acri {

/// Fuzzy set on a finite labeled universe. Labels are unique, memberships
/// lie in [0,1]; values are immutable after construction.
class FuzzySet {
public:
  FuzzySet(std::vector<std::string> universe, std::vector<double> memberships);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<double>& memberships() const { return memberships_; }
  std::size_t size() const { return universe_.size(); }
  double operator[](std::size_t k) const { return memberships_[k]; }

  /// Some membership equals 1.
  bool is_normal() const;

  /// True when both sets share the same ordered universe.
  bool same_universe(const FuzzySet& other) const;

private:
  std::vector<std::string> universe_;
  std::vector<double> memberships_;
};

/// IF x is D THEN y is B.
struct Rule {
  FuzzySet antecedent;
  FuzzySet consequent;
};

/// Cartesian product of two fuzzy sets, row-major, labels joined with '|'.
/// The combiner must be a conjunctor with neutral element 1 (default min).
FuzzySet product_set(const FuzzySet& d1, const FuzzySet& d2,
                     const Aggregator& combiner);
FuzzySet product_set(const FuzzySet& d1, const FuzzySet& d2);

/// Sup-composition for fuzzy modus ponens:
/// B'(y) = max over x of A(D'(x), I(D(x), B(y))).
/// The input universe must equal the antecedent universe; non-normal input
/// or antecedent only warns, the composition stays well defined.
FuzzySet fmp_infer(const Aggregator& a, const Implication& i, const Rule& rule,
                   const FuzzySet& input);

/// Sup-composition for fuzzy modus tollens:
/// D'(x) = max over y of A(B'(y), I(D(x), B(y))),
/// with the input in the first aggregator slot.
FuzzySet fmt_infer(const Aggregator& a, const Implication& i, const Rule& rule,
                   const FuzzySet& input);

/// Minkowski distance (sum |d1-d2|^p)^(1/p), p >= 1, same universe.
double distance(const FuzzySet& d1, const FuzzySet& d2, double p);

/// Pointwise negation of the memberships.
FuzzySet complement(const FuzzySet& d, const Negation& n);

}  // namespace acri

#endif
