#ifndef ACRI_IMPLICATIONS_HPP
#define ACRI_IMPLICATIONS_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acri/connectives.hpp"
#include "acri/generator.hpp"

namespace acri {

/// Grounded, 2-increasing binary function with neutral element 1.
/// Construction validates the boundary conditions and 2-increasingness on
/// the 101-point grid (rectangle defect >= -1e-9) and rejects violations.
class Copula {
public:
  static Copula product();      // Pi
  static Copula lukasiewicz();  // W(x,y) = max(x+y-1, 0)
  static Copula archimedean(Generator additive);

  double operator()(double x, double y) const { return fn_(x, y); }

  /// C(x,y)/x for x > 0, in a family-specific numerically stable form
  /// (the product copula returns y without the multiply-divide roundtrip).
  double section_ratio(double x, double y) const { return section_(x, y); }

  const std::string& describe() const { return desc_; }

private:
  Copula(std::function<double(double, double)> fn,
         std::function<double(double, double)> section, std::string desc);

  std::function<double(double, double)> fn_, section_;
  std::string desc_;
};

/// Fuzzy implication: nonincreasing in the first argument, nondecreasing in
/// the second, with I(0,0)=I(1,1)=1 and I(1,0)=0. Every factory validates
/// these axioms together with the boundary conditions I(0,y)=1 and I(x,1)=1
/// exactly on the 101-point lattice grid and throws on violation.
class Implication {
public:
  static Implication lukasiewicz();  // min(1-x+y, 1)
  static Implication reichenbach();  // 1-x+xy

  /// sup{t : A(x,t) <= y} by bisection (60 iterations); ties at plateau
  /// edges resolve toward the supremum.
  static Implication residual(Aggregator a);

  /// A(N(x), y) for a disjunctor A.
  static Implication an_implication(Aggregator a, Negation n);

  /// A1(N(x), A2(x,y)); validated only against the implication axioms.
  static Implication ql_operation(Aggregator a1, Aggregator a2, Negation n);

  /// f^-1(x f(y)) with 0 * inf = 0.
  static Implication f_implication(Generator f);

  /// g^(-1)(g(y)/x) with division by zero read as +inf.
  static Implication g_implication(Generator g);

  /// Power-based implication of the minimum t-norm: 1 if x<=y else 0.
  static Implication t_power_min();

  /// Power-based implication of an Archimedean t-norm with additive
  /// generator t: 1 if x<=y, else t(x)/t(y).
  static Implication t_power(Generator t);

  /// C(x,y)/x for x>0, else 1. Rejected unless nonincreasing in x on the
  /// validation grid (not every copula qualifies).
  static Implication probabilistic(Copula c);

  /// C(x,y) - x + 1.
  static Implication probabilistic_s(Copula c);

  /// Bilinear interpolation through a sample matrix satisfying the axioms.
  static Implication tabulated(std::vector<double> x, std::vector<double> y,
                               std::vector<double> value);

  /// Escape hatch used by tests; axioms still validated.
  static Implication from_binary(std::function<double(double, double)> fn,
                                 std::string desc);

  double operator()(double x, double y) const { return fn_(x, y); }
  const std::function<double(double, double)>& fn() const { return fn_; }
  const std::string& describe() const { return desc_; }

private:
  Implication(std::function<double(double, double)> fn, std::string desc);

  std::function<double(double, double)> fn_;
  std::string desc_;
};

/// Pointwise lattice operations and conjugation (all again implications).
Implication meet(const Implication& i, const Implication& j);
Implication join(const Implication& i, const Implication& j);
Implication conjugate(const Implication& i, const Automorphism& phi);

/// x -> I(x,0).
Negation natural_negation(const Implication& i);

enum class ContrapositivisationSide { Lower, Upper };

/// Two-branch repair making I satisfy contraposition with the strong
/// negation n:
///   lower: I(x,y) if y >= N(x), else I(N(y),N(x))
///   upper: I(x,y) if y <= N(x), else I(N(y),N(x))
/// Requires n involutive on the check grid.
Implication contrapositivise(const Implication& i, const Negation& n,
                             ContrapositivisationSide side);

/// Property predicates of Def-style implication laws, scanned on a grid.
/// EP uses a coarsened sub-grid of at most 21 points per axis.
struct ImplicationProfile {
  bool np = false;  // I(1,y) = y
  bool ip = false;  // I(x,x) = 1
  bool ep = false;  // I(x,I(y,z)) = I(y,I(x,z))
  bool op = false;  // I(x,y)=1  <=>  x<=y
  bool cp_with_n = false;
  bool lb = false;
  bool rb = false;

  std::optional<double> np_failure, ip_failure, lb_failure, rb_failure;
  std::optional<std::array<double, 3>> ep_failure;
  std::optional<std::array<double, 2>> op_failure, cp_failure;

  std::string grid;
};

ImplicationProfile profile_implication(const Implication& i, const Negation& n,
                                       std::vector<double> grid_points,
                                       double tol = 1e-9);
ImplicationProfile profile_implication(const Implication& i, const Negation& n,
                                       double tol = 1e-9);

}  // namespace acri

#endif
