#ifndef ACRI_CONFORMANCE_HPP
#define ACRI_CONFORMANCE_HPP

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "acri/connectives.hpp"
#include "acri/engine.hpp"
#include "acri/grid.hpp"
#include "acri/implications.hpp"
#include "acri/report.hpp"

namespace acri {

using BinaryFn = std::function<double(double, double)>;

/// A-conditionality: A(a, I(a,b)) <= b on the grid. The default tolerance 0
/// makes "pass" mean "no violation at any grid pair, exactly".
CheckReport check_ac(const Aggregator& a, const Implication& i,
                     const Grid& grid, double tol = 0.0);
CheckReport check_ac_fn(const BinaryFn& a, const BinaryFn& i, const Grid& grid,
                        double tol = 0.0);

/// Dual A-conditionality: A(N(b), I(a,b)) <= N(a).
CheckReport check_dac(const Aggregator& a, const Implication& i,
                      const Negation& n, const Grid& grid, double tol = 0.0);
CheckReport check_dac_fn(const BinaryFn& a, const BinaryFn& i,
                         const std::function<double(double)>& n,
                         const Grid& grid, double tol = 0.0);

/// Law of importation: I(A(x,y),z) = I(x,I(y,z)), scanned over a coarsened
/// triple grid (at most 21 points per axis).
CheckReport check_lia(const Aggregator& a, const Implication& i,
                      const Grid& grid, double tol = 0.0);

/// Contraposition: I(x,y) = I(N(y),N(x)).
CheckReport check_cpn(const Implication& i, const Negation& n,
                      const Grid& grid, double tol = 0.0);

enum class Axiom { A1, A2, A3, A4, A5, A6, A7, A8 };

std::string axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(const std::string& name);

/// Inference instance for the axiom checks. `input` defaults to what the
/// axiom dictates (D, its complement, a modified D, ...). A2 compares two
/// explicitly provided inputs and is a parameter error without them.
struct AxiomInstance {
  Rule rule;
  std::optional<FuzzySet> input;
  std::optional<FuzzySet> input2;
  std::string name;
};

struct AxiomCheckOptions {
  double tol = 1e-9;  // use 1e-6 for bisection-backed connectives
  /// Zadeh modifiers for A6/A7 ("very" and "more or less"); experimental
  /// defaults: squaring and square root.
  std::function<double(double)> very;
  std::function<double(double)> more_or_less;
};

/// Per-instance, per-axiom reports, assembled in input order.
std::vector<CheckReport> check_axioms(const Aggregator& a,
                                      const Implication& i, const Negation& n,
                                      std::span<const AxiomInstance> instances,
                                      const std::set<Axiom>& which,
                                      const AxiomCheckOptions& options = {});

/// Seeded random normal rules for the property suites: universes of size
/// min_size..max_size, memberships uniform on the 2^-53 lattice, one
/// coordinate forced to 1. The optional flags additionally pin a zero
/// consequent coordinate (so the complement input of the modus-tollens
/// check is normal too) or an interior one (so modus-ponens failures have
/// a witness to report).
struct RandomRuleOptions {
  std::size_t min_size = 3;
  std::size_t max_size = 8;
  bool force_zero_consequent = false;
  bool force_interior_consequent = false;
};

Rule make_random_rule(std::mt19937_64& rng, const RandomRuleOptions& = {});

}  // namespace acri

#endif
