#include "acri/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace acri {

Aggregator aggregator_from_implication(const Implication& i, double tol) {
  if (!(tol > 0.0)) detail::fail("infimum construction needs tol > 0");
  int iterations = 20;
  while (iterations < 60 && std::pow(0.5, iterations) > tol * 0.25)
    ++iterations;
  auto fn = [i, iterations](double a, double b) {
    return detail::inf_of_upper_interval(
        [&](double c) { return i(a, c) >= b - 1e-12; }, iterations);
  };
  // The construction yields an aggregation function only when
  // I(1,b) < 1 below b = 1.
  for (const double b : detail::validation_grid(21))
    if (b < 1.0 && i(1.0, b) >= 1.0)
      detail::fail("residual construction needs I(1,b) < 1 for b < 1; " +
                   i.describe() + " has I(1," + std::to_string(b) + ") = 1");
  return Aggregator::from_binary(std::move(fn),
                                 "residual-of(" + i.describe() + ")");
}

Aggregator aggregator_for_f_implication(const Generator& f) {
  require_f_generator(f);
  auto fn = [f](double x, double y) {
    if (x == 0.0) return 0.0;
    if (y == 1.0) return 1.0;  // f(1)=0, so the quotient vanishes
    return clamp01(f.pseudo_inverse(f(y) / x));
  };
  return Aggregator::from_binary(std::move(fn),
                                 "closed-form-f(" + f.describe() + ")");
}

Aggregator aggregator_for_g_implication(const Generator& g) {
  require_g_generator(g);
  auto fn = [g](double x, double y) {
    if (x == 0.0) return 0.0;
    if (x == 1.0) return y;  // g^-1(g(y)) without roundtrip error
    return clamp01(g.pseudo_inverse(x * g(y)));
  };
  return Aggregator::from_binary(std::move(fn),
                                 "closed-form-g(" + g.describe() + ")");
}

Aggregator aggregator_for_tpower(const Generator& t) {
  require_tnorm_generator(t);
  auto fn = [t](double x, double y) {
    if (y == 0.0) return 0.0;
    if (y == 1.0) return x;  // t^-1(t(x))
    return clamp01(t.pseudo_inverse(t(x) / y));
  };
  return Aggregator::from_binary(std::move(fn),
                                 "closed-form-tpower(" + t.describe() + ")");
}

Aggregator aggregator_for_ordinal_sum_sn(
    std::vector<Aggregator::OrdinalSummand> summands, const Negation& n) {
  std::sort(summands.begin(), summands.end(),
            [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& s = summands[k];
    if (!(s.lo >= 0.0 && s.lo < s.hi && s.hi <= 1.0))
      detail::fail("ordinal summand interval must satisfy 0 <= a < e <= 1");
    if (k > 0 && summands[k - 1].hi > s.lo)
      detail::fail("ordinal summand intervals overlap");
    require_tconorm_generator(s.generator);
  }
  auto parts = std::make_shared<const std::vector<Aggregator::OrdinalSummand>>(
      std::move(summands));
  auto fn = [parts, n](double x, double y) {
    const double nx = n(x);
    // Zero branch with the same 1e-12 cushion the infimum oracle applies,
    // so the two sides of the jump at y = N(x) agree.
    if (nx >= y - 1e-12) return 0.0;
    for (const auto& s : *parts) {
      if (nx >= s.lo && nx <= s.hi && y <= s.hi) {
        const double w = s.hi - s.lo;
        const double u = (nx - s.lo) / w;
        const double v = (y - s.lo) / w;
        const double diff = s.generator(v) - s.generator(u);
        return clamp01(s.lo + w * s.generator.pseudo_inverse(diff));
      }
    }
    return y;
  };
  return Aggregator::from_binary(
      std::move(fn), "closed-form-ordinal-sum-sn(" +
                         std::to_string(parts->size()) + " summands," +
                         n.describe() + ")");
}

Aggregator aggregator_for_probabilistic(const Generator& c, bool s_variant) {
  require_copula_generator(c);
  std::function<double(double, double)> fn;
  if (!s_variant) {
    fn = [c](double x, double y) {
      if (x == 0.0 || y == 0.0) return 0.0;
      if (x == 1.0) return y;  // c(y) - c(1) = c(y)
      if (y == 1.0) return 1.0;
      return clamp01(c.pseudo_inverse(c(x * y) - c(x)));
    };
  } else {
    fn = [c](double x, double y) {
      const double base = x - (1.0 - y);  // x+y-1 without cancellation
      // Cushion mirrors the infimum oracle's slack at the x+y=1 jump.
      if (base <= 1e-12) return 0.0;
      if (x == 1.0) return y;
      return clamp01(c.pseudo_inverse(c(base) - c(x)));
    };
  }
  return Aggregator::from_binary(
      std::move(fn), std::string(s_variant ? "closed-form-probabilistic-s("
                                           : "closed-form-probabilistic(") +
                         c.describe() + ")");
}

Aggregator star_extension(const Aggregator& a, int refine) {
  if (refine < 10) detail::fail("star extension needs refine >= 10");
  const double h = 1.0 / refine;
  const double border_tol = 10.0 * h;
  // Border continuity, checked on the grid edges against one inward step.
  for (const double t : detail::validation_grid()) {
    const double in = std::min(std::max(t, h), 1.0 - h);
    const struct {
      double x0, y0, x1, y1;
    } probes[] = {
        {t, 0.0, in, h},          {t, 1.0, in, 1.0 - h},
        {0.0, t, h, in},          {1.0, t, 1.0 - h, in},
    };
    for (const auto& p : probes)
      if (std::abs(a(p.x0, p.y0) - a(p.x1, p.y1)) > border_tol)
        detail::fail("star extension needs a border-continuous aggregator; " +
                     a.describe() + " jumps near (" + std::to_string(p.x0) +
                     "," + std::to_string(p.y0) + ")");
  }
  auto fn = [a, h](double x, double y) {
    const bool interior = x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0;
    if (!interior) return a(x, y);
    // Monotonicity turns the open-rectangle supremum into the value one
    // refinement step inward.
    return a(std::max(x - h, 0.0), std::max(y - h, 0.0));
  };
  return Aggregator::from_binary(std::move(fn),
                                 "star(" + a.describe() + ")");
}

CheckReport check_dac_residual_bound(const Implication& i, const Aggregator& a,
                                     const Negation& n, const Automorphism& phi,
                                     const Grid& grid, double tol) {
  const auto& pts = grid.points();
  // Precondition: left neutral element 1.
  for (const double x : pts)
    if (!near(a(1.0, x), x, 1e-9))
      detail::fail("precondition left-neutral-one failed for " + a.describe() +
                   " at x=" + std::to_string(x));
  // Precondition: x -> A(x,1) strictly increasing and < 1 below 1.
  double prev = a(pts.front(), 1.0);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double cur = a(pts[k], 1.0);
    if (!(cur > prev))
      detail::fail(
          "precondition strictly-increasing-top-section failed for " +
          a.describe() + " at x=" + std::to_string(pts[k]));
    prev = cur;
  }
  for (const double x : pts)
    if (x < 1.0 && !(a(x, 1.0) < 1.0))
      detail::fail("precondition top-section-below-one failed for " +
                   a.describe() + " at x=" + std::to_string(x));
  // Precondition: exchange A(x,A(y,z)) = A(y,A(x,z)) on a coarse triple grid.
  const Grid sub = grid.coarsened(21);
  for (const double x : sub.points())
    for (const double y : sub.points())
      for (const double z : sub.points())
        if (!near(a(x, a(y, z)), a(y, a(x, z)), 1e-9))
          detail::fail("precondition exchange failed for " + a.describe() +
                       " at (" + std::to_string(x) + "," + std::to_string(y) +
                       "," + std::to_string(z) + ")");

  CheckReport report;
  report.law = "dac-residual-bound";
  report.grid = grid.describe();
  report.tolerance = tol;
  for (const double x : pts) {
    for (const double y : pts) {
      const double lhs = i(x, y);
      const double shifted = phi(n(x)) - phi(a(n(y), 1.0));
      const double bound = phi.inverse(std::min(shifted + 1.0, 1.0));
      const double violation = lhs - bound;
      if (violation > report.worst_violation) {
        report.worst_violation = violation;
        report.witness = {x, y};
      }
    }
  }
  report.pass = report.worst_violation <= tol;
  return report;
}

}  // namespace acri
