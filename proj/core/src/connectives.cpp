#include "acri/connectives.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "interp.hpp"

namespace acri {

using detail::pwl;
using detail::Pwl2d;
using detail::require_axis;

// ---------------------------------------------------------------------------
// Automorphism

Automorphism::Automorphism(std::function<double(double)> fwd,
                           std::function<double(double)> inv, std::string desc)
    : fwd_(std::move(fwd)), inv_(std::move(inv)), desc_(std::move(desc)) {}

Automorphism Automorphism::identity() {
  auto id = [](double x) { return x; };
  return Automorphism(id, id, "identity");
}

Automorphism Automorphism::power(double exponent) {
  if (!(exponent > 0.0)) detail::fail("automorphism exponent must be > 0");
  const double p = exponent;
  return Automorphism([p](double x) { return std::pow(x, p); },
                      [p](double v) { return std::pow(v, 1.0 / p); },
                      "power(" + std::to_string(exponent) + ")");
}

Automorphism Automorphism::tabulated(std::vector<double> x,
                                     std::vector<double> value) {
  require_axis(x, "automorphism");
  if (value.size() != x.size())
    detail::fail("automorphism: parallel arrays of different length");
  if (value.front() != 0.0 || value.back() != 1.0)
    detail::fail("automorphism samples must run from 0 to 1");
  for (std::size_t i = 1; i < value.size(); ++i)
    if (!(value[i] > value[i - 1]))
      detail::fail("automorphism samples must strictly increase");
  auto xs = std::make_shared<const std::vector<double>>(std::move(x));
  auto vs = std::make_shared<const std::vector<double>>(std::move(value));
  return Automorphism([xs, vs](double t) { return pwl(*xs, *vs, t); },
                      [xs, vs](double t) { return pwl(*vs, *xs, t); },
                      "tabulated(" + std::to_string(xs->size()) + ")");
}

Automorphism Automorphism::inverted() const {
  return Automorphism(inv_, fwd_, desc_ + "^-1");
}

// ---------------------------------------------------------------------------
// Negation

Negation::Negation(std::function<double(double)> fn, std::string desc)
    : fn_(std::move(fn)), desc_(std::move(desc)) {}

Negation Negation::bottom() {
  return Negation([](double x) { return x == 0.0 ? 1.0 : 0.0; }, "bottom");
}

Negation Negation::top() {
  return Negation([](double x) { return x == 1.0 ? 0.0 : 1.0; }, "top");
}

Negation Negation::standard() {
  return Negation([](double x) { return 1.0 - x; }, "standard");
}

Negation Negation::conjugated(Negation base, Automorphism phi) {
  auto desc = base.describe() + "_" + phi.describe();
  return Negation(
      [base, phi](double x) { return phi.inverse(base(phi(x))); },
      std::move(desc));
}

Negation Negation::from_unary(std::function<double(double)> fn,
                              std::string desc) {
  if (fn(0.0) != 1.0 || fn(1.0) != 0.0)
    detail::fail("negation " + desc + " violates N(0)=1, N(1)=0");
  return Negation(std::move(fn), std::move(desc));
}

Negation Negation::tabulated(std::vector<double> x, std::vector<double> value) {
  require_axis(x, "negation");
  if (value.size() != x.size())
    detail::fail("negation: parallel arrays of different length");
  if (value.front() != 1.0 || value.back() != 0.0)
    detail::fail("negation samples must run from 1 to 0");
  for (std::size_t i = 1; i < value.size(); ++i)
    if (value[i] > value[i - 1])
      detail::fail("negation samples must be nonincreasing");
  auto xs = std::make_shared<const std::vector<double>>(std::move(x));
  auto vs = std::make_shared<const std::vector<double>>(std::move(value));
  return Negation([xs, vs](double t) { return pwl(*xs, *vs, t); },
                  "tabulated(" + std::to_string(xs->size()) + ")");
}

bool Negation::is_strong(double tol) const {
  for (const double x : detail::validation_grid())
    if (!near(fn_(fn_(x)), x, tol)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Aggregator

Aggregator::Aggregator(std::function<double(double, double)> fn,
                       std::string desc)
    : fn_(std::move(fn)), desc_(std::move(desc)) {}

Aggregator Aggregator::minimum() {
  return Aggregator([](double x, double y) { return std::min(x, y); }, "min");
}

Aggregator Aggregator::product() {
  return Aggregator([](double x, double y) { return x * y; }, "product");
}

Aggregator Aggregator::lukasiewicz_tnorm() {
  // max(x+y-1, 0), written so that lattice points and neutral arguments
  // evaluate exactly.
  return Aggregator(
      [](double x, double y) { return std::max(x - (1.0 - y), 0.0); },
      "lukasiewicz-tnorm");
}

Aggregator Aggregator::maximum() {
  return Aggregator([](double x, double y) { return std::max(x, y); }, "max");
}

Aggregator Aggregator::probabilistic_sum() {
  return Aggregator(
      [](double x, double y) { return clamp01(x + (1.0 - x) * y); },
      "probabilistic-sum");
}

Aggregator Aggregator::lukasiewicz_tconorm() {
  return Aggregator([](double x, double y) { return std::min(x + y, 1.0); },
                    "lukasiewicz-tconorm");
}

Aggregator Aggregator::greatest_disjunctor() {
  return Aggregator(
      [](double x, double y) { return (x == 0.0 && y == 0.0) ? 0.0 : 1.0; },
      "greatest-disjunctor");
}

Aggregator Aggregator::smallest_disjunctor() {
  return Aggregator(
      [](double x, double y) { return (x == 1.0 || y == 1.0) ? 1.0 : 0.0; },
      "smallest-disjunctor");
}

Aggregator Aggregator::wqam(double lambda, Generator f) {
  if (!(lambda > 0.0 && lambda < 1.0))
    detail::fail("wqam weight must lie in (0,1)");
  auto fn = [lambda, f](double x, double y) {
    if (x == y) return x;  // f^-1(f(x)) without roundtrip error
    const double s = (1.0 - lambda) * f(x) + lambda * f(y);
    if (std::isnan(s)) return 0.0;  // opposite infinities, conjunctive
    return f.pseudo_inverse(s);
  };
  return Aggregator(std::move(fn), "wqam(" + std::to_string(lambda) + "," +
                                       f.describe() + ")");
}

Aggregator Aggregator::representable(Generator g) {
  require_representable_generator(g);
  auto fn = [g](double x, double y) {
    const double s = g(x) + g(y);
    if (std::isnan(s)) return 0.0;  // -inf + inf, conjunctive convention
    return g.pseudo_inverse(s);
  };
  return Aggregator(std::move(fn), "representable(" + g.describe() + ")");
}

Aggregator Aggregator::ordinal_sum_tconorm(std::vector<OrdinalSummand> summands) {
  if (summands.empty()) detail::fail("ordinal sum needs at least one summand");
  std::sort(summands.begin(), summands.end(),
            [](const OrdinalSummand& a, const OrdinalSummand& b) {
              return a.lo < b.lo;
            });
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    if (!(s.lo >= 0.0 && s.lo < s.hi && s.hi <= 1.0))
      detail::fail("ordinal summand interval must satisfy 0 <= a < e <= 1");
    if (i > 0 && summands[i - 1].hi > s.lo)
      detail::fail("ordinal summand intervals overlap");
    require_tconorm_generator(s.generator);
  }
  auto parts = std::make_shared<const std::vector<OrdinalSummand>>(
      std::move(summands));
  auto fn = [parts](double x, double y) {
    if (x == 0.0) return y;
    if (y == 0.0) return x;
    if (x == 1.0 || y == 1.0) return 1.0;
    for (const auto& s : *parts) {
      if (x >= s.lo && x <= s.hi && y >= s.lo && y <= s.hi) {
        const double w = s.hi - s.lo;
        const double u = (x - s.lo) / w, v = (y - s.lo) / w;
        return clamp01(s.lo +
                       w * s.generator.pseudo_inverse(s.generator(u) +
                                                      s.generator(v)));
      }
    }
    return std::max(x, y);
  };
  return Aggregator(std::move(fn),
                    "ordinal-sum-tconorm(" + std::to_string(parts->size()) +
                        " summands)");
}

Aggregator Aggregator::conjugated(Aggregator base, Automorphism phi) {
  auto desc = base.describe() + "_" + phi.describe();
  return Aggregator(
      [base, phi](double x, double y) {
        return phi.inverse(base(phi(x), phi(y)));
      },
      std::move(desc));
}

Aggregator Aggregator::dual(Aggregator base, Negation n) {
  if (!n.is_strong())
    warn("dual of " + base.describe() + ": negation " + n.describe() +
         " is not involutive on the check grid");
  auto desc = "dual(" + base.describe() + "," + n.describe() + ")";
  return Aggregator(
      [base, n](double x, double y) { return n(base(n(x), n(y))); },
      std::move(desc));
}

Aggregator Aggregator::tabulated(std::vector<double> x, std::vector<double> y,
                                 std::vector<double> value) {
  require_axis(x, "aggregator");
  require_axis(y, "aggregator");
  if (value.size() != x.size() * y.size())
    detail::fail("aggregator: sample matrix has wrong size");
  Pwl2d table{std::move(x), std::move(y), std::move(value)};
  const std::size_t nx = table.xs.size(), ny = table.ys.size();
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      if (i > 0 && table.at(i, j) < table.at(i - 1, j))
        detail::fail("aggregator samples must be nondecreasing in x");
      if (j > 0 && table.at(i, j) < table.at(i, j - 1))
        detail::fail("aggregator samples must be nondecreasing in y");
    }
  if (table.at(0, 0) != 0.0 || table.at(nx - 1, ny - 1) != 1.0)
    detail::fail("aggregator samples must satisfy A(0,0)=0 and A(1,1)=1");
  auto shared = std::make_shared<const Pwl2d>(std::move(table));
  return Aggregator(
      [shared](double a, double b) { return (*shared)(a, b); },
      "tabulated(" + std::to_string(nx) + "x" + std::to_string(ny) + ")");
}

Aggregator Aggregator::from_binary(std::function<double(double, double)> fn,
                                   std::string desc) {
  return Aggregator(std::move(fn), std::move(desc));
}

// ---------------------------------------------------------------------------
// Natural negation of an aggregator

Negation natural_negation(const Aggregator& a, double tol) {
  if (!(tol > 0.0)) detail::fail("natural negation needs tol > 0");
  // 60 iterations overshoot any sensible tol and land endpoint values
  // inside the exactness snap.
  auto fn = [a](double x) {
    auto vanishes = [&](double t) { return a(t, x) <= 0.0; };
    double r = detail::sup_of_lower_interval(vanishes);
    // Dense-scan confirmation at 1e-4 resolution: extend upward if the
    // zero set reaches further than the bisection found.
    double t = r;
    while (t + 1e-4 <= 1.0 && vanishes(t + 1e-4)) t += 1e-4;
    if (t > r + 1e-12) r = t > 1.0 - 1e-15 ? 1.0 : t;
    return r;
  };
  if (fn(0.0) != 1.0 || fn(1.0) != 0.0)
    detail::fail("natural negation of " + a.describe() +
                 " is not a fuzzy negation (N(0)=1, N(1)=0 fail)");
  return Negation::from_unary(std::move(fn),
                              "natural-of(" + a.describe() + ")");
}

// ---------------------------------------------------------------------------
// Profile

namespace {
std::string grid_label(std::size_t n) {
  return "uniform-" + std::to_string(n) + "[0,1]";
}
}  // namespace

AggregatorProfile profile_aggregator(const Aggregator& a, const Negation& n,
                                     std::vector<double> grid_points,
                                     double tol) {
  if (grid_points.size() < 2) detail::fail("profile grid needs >= 2 points");
  std::sort(grid_points.begin(), grid_points.end());
  if (grid_points.front() != 0.0 || grid_points.back() != 1.0)
    detail::fail("profile grid must contain 0 and 1");

  AggregatorProfile p;
  p.grid = grid_label(grid_points.size());
  p.is_conjunctor = a(1.0, 0.0) == 0.0 && a(0.0, 1.0) == 0.0;
  p.is_disjunctor = a(1.0, 0.0) == 1.0 && a(0.0, 1.0) == 1.0;

  p.left_neutral_one = true;
  p.right_neutral_one = true;
  p.satisfies_lnc = true;
  p.satisfies_lem = true;
  for (const double x : grid_points) {
    if (p.left_neutral_one && !near(a(1.0, x), x, tol)) {
      p.left_neutral_one = false;
      p.left_neutral_failure = {{1.0, x}};
    }
    if (p.right_neutral_one && !near(a(x, 1.0), x, tol)) {
      p.right_neutral_one = false;
      p.right_neutral_failure = {{x, 1.0}};
    }
    const double nx = n(x);
    if (p.satisfies_lnc &&
        !(near(a(nx, x), 0.0, tol) && near(a(x, nx), 0.0, tol))) {
      p.satisfies_lnc = false;
      p.lnc_failure = x;
    }
    if (p.satisfies_lem &&
        !(near(a(nx, x), 1.0, tol) && near(a(x, nx), 1.0, tol))) {
      p.satisfies_lem = false;
      p.lem_failure = x;
    }
  }

  p.commutative_on_grid = true;
  for (std::size_t i = 0; i < grid_points.size() && p.commutative_on_grid; ++i)
    for (std::size_t j = i + 1; j < grid_points.size(); ++j) {
      const double x = grid_points[i], y = grid_points[j];
      if (!near(a(x, y), a(y, x), tol)) {
        p.commutative_on_grid = false;
        p.commutativity_failure = {{x, y}};
        break;
      }
    }

  for (const double x : grid_points) {
    for (const double y : grid_points) {
      if (!p.has_zero_divisors && x > 0.0 && y > 0.0 && a(x, y) == 0.0) {
        p.has_zero_divisors = true;
        p.zero_divisor_witness = {{x, y}};
      }
      if (!p.has_one_divisors && x < 1.0 && y < 1.0 && a(x, y) == 1.0) {
        p.has_one_divisors = true;
        p.one_divisor_witness = {{x, y}};
      }
    }
  }
  return p;
}

AggregatorProfile profile_aggregator(const Aggregator& a, const Negation& n,
                                     double tol) {
  return profile_aggregator(a, n, detail::validation_grid(), tol);
}

namespace detail {

std::vector<double> validation_grid(int n) {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    pts.push_back(snap01(static_cast<double>(k) / (n - 1)));
  return pts;
}

}  // namespace detail

}  // namespace acri
