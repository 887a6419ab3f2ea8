#ifndef ACRI_CONNECTIVES_HPP
#define ACRI_CONNECTIVES_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acri/generator.hpp"
#include "acri/unit.hpp"

namespace acri {

class Implication;

/// Increasing bijection of [0,1] with phi(0)=0, phi(1)=1.
class Automorphism {
public:
  static Automorphism identity();
  static Automorphism power(double exponent);  // x^p, p > 0
  /// Piecewise-linear through strictly increasing samples; must start at
  /// (0,0) and end at (1,1).
  static Automorphism tabulated(std::vector<double> x, std::vector<double> value);

  double operator()(double x) const { return fwd_(x); }
  double inverse(double v) const { return inv_(v); }

  /// The inverse bijection as an Automorphism.
  Automorphism inverted() const;

  const std::string& describe() const { return desc_; }

private:
  Automorphism(std::function<double(double)> fwd,
               std::function<double(double)> inv, std::string desc);

  std::function<double(double)> fwd_, inv_;
  std::string desc_;
};

/// Antitone unary connective with N(0)=1 and N(1)=0.
class Negation {
public:
  static Negation bottom();    // 1 at 0, else 0
  static Negation top();       // 0 at 1, else 1
  static Negation standard();  // 1-x
  static Negation conjugated(Negation base, Automorphism phi);
  /// x -> I(x,0); see natural_negation() in implications.hpp for the
  /// overload taking an Implication directly.
  static Negation from_unary(std::function<double(double)> fn, std::string desc);
  /// Piecewise-linear through nonincreasing samples from (0,1) to (1,0).
  static Negation tabulated(std::vector<double> x, std::vector<double> value);

  double operator()(double x) const { return fn_(x); }

  /// Involutive on the 101-point check grid within tol.
  bool is_strong(double tol = 1e-9) const;

  const std::string& describe() const { return desc_; }

private:
  Negation(std::function<double(double)> fn, std::string desc);

  std::function<double(double)> fn_;
  std::string desc_;
};

/// Binary aggregation function: A(0,0)=0, A(1,1)=1, nondecreasing in each
/// argument. Values are immutable; evaluation is pure and reentrant.
class Aggregator {
public:
  static Aggregator minimum();
  static Aggregator product();
  static Aggregator lukasiewicz_tnorm();   // max(x+y-1, 0)
  static Aggregator maximum();
  static Aggregator probabilistic_sum();   // x+y-xy
  static Aggregator lukasiewicz_tconorm(); // min(x+y, 1)
  static Aggregator greatest_disjunctor(); // 0 only at (0,0)
  static Aggregator smallest_disjunctor(); // 1 only when an argument is 1

  /// Weighted quasi-arithmetic mean f^-1((1-lambda) f(x) + lambda f(y)),
  /// lambda in (0,1). Opposite infinities resolve conjunctively (-inf).
  static Aggregator wqam(double lambda, Generator f);

  /// g^(-1)(g(x)+g(y)) for a strictly increasing g with g(0)<0<g(1);
  /// -inf + inf resolves to -inf.
  static Aggregator representable(Generator g);

  struct OrdinalSummand {
    double lo = 0.0;        // a_alpha
    double hi = 1.0;        // e_alpha
    Generator generator;    // t-conorm additive generator of the summand
  };
  /// Continuous t-conorm assembled from Archimedean summands on pairwise
  /// disjoint open intervals; max of the arguments elsewhere.
  static Aggregator ordinal_sum_tconorm(std::vector<OrdinalSummand> summands);

  static Aggregator conjugated(Aggregator base, Automorphism phi);
  /// N(A(N(x),N(y))). Warns when n is not involutive on the check grid.
  static Aggregator dual(Aggregator base, Negation n);

  /// Bilinear interpolation through a monotone sample matrix
  /// (row-major: value[i*y.size()+j] = A(x[i], y[j])).
  static Aggregator tabulated(std::vector<double> x, std::vector<double> y,
                              std::vector<double> value);

  /// Escape hatch for constructions; boundary and monotonicity are the
  /// caller's responsibility.
  static Aggregator from_binary(std::function<double(double, double)> fn,
                                std::string desc);

  double operator()(double x, double y) const { return fn_(x, y); }
  const std::function<double(double, double)>& fn() const { return fn_; }
  const std::string& describe() const { return desc_; }

private:
  Aggregator(std::function<double(double, double)> fn, std::string desc);

  std::function<double(double, double)> fn_;
  std::string desc_;
};

/// sup{t : A(t,x)=0}, the natural negation of an aggregator. Bisection at
/// the given tolerance with a dense-scan confirmation at 1e-4 resolution.
/// Throws when the result is not a fuzzy negation (e.g. A not a conjunctor).
Negation natural_negation(const Aggregator& a, double tol = 1e-6);

/// Grid-scan classification of an aggregator against Defs of conjunctor,
/// disjunctor, neutral elements, divisors, LNC and LEM. Universal flags are
/// sound on the sampled grid only; existential flags carry exact witnesses.
struct AggregatorProfile {
  bool is_conjunctor = false;
  bool is_disjunctor = false;
  bool left_neutral_one = false;
  bool right_neutral_one = false;
  bool commutative_on_grid = false;
  bool has_zero_divisors = false;
  bool has_one_divisors = false;
  bool satisfies_lnc = false;
  bool satisfies_lem = false;

  // Witnesses: {x, y} pairs. Present for true existential flags and for
  // failed universal flags.
  std::optional<std::array<double, 2>> zero_divisor_witness;
  std::optional<std::array<double, 2>> one_divisor_witness;
  std::optional<std::array<double, 2>> left_neutral_failure;
  std::optional<std::array<double, 2>> right_neutral_failure;
  std::optional<std::array<double, 2>> commutativity_failure;
  std::optional<double> lnc_failure;
  std::optional<double> lem_failure;

  std::string grid;
};

AggregatorProfile profile_aggregator(const Aggregator& a, const Negation& n,
                                     std::vector<double> grid_points,
                                     double tol = 1e-9);
AggregatorProfile profile_aggregator(const Aggregator& a, const Negation& n,
                                     double tol = 1e-9);  // 101-point grid

namespace detail {
/// Snapped uniform lattice grid used by construction-time validations.
std::vector<double> validation_grid(int n = 101);
}  // namespace detail

}  // namespace acri

#endif
