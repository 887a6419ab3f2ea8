#include "acri/implications.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "interp.hpp"

namespace acri {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using BinaryFn = std::function<double(double, double)>;

/// Exact grid validation of the implication axioms (I1)-(I5) plus the
/// boundary conditions I(0,y)=1 and I(x,1)=1. Throws with a witness.
void require_implication_axioms(const BinaryFn& fn, const std::string& desc) {
  const std::vector<double> grid = detail::validation_grid();
  const std::size_t n = grid.size();
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = fn(grid[i], grid[j]);

  const auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
  const auto reject = [&](const std::string& what, double x, double y) {
    detail::fail("implication " + desc + " violates " + what + " at (" +
                 std::to_string(x) + "," + std::to_string(y) + ")");
  };

  if (at(0, 0) != 1.0) reject("I(0,0)=1", 0, 0);
  if (at(n - 1, n - 1) != 1.0) reject("I(1,1)=1", 1, 1);
  if (at(n - 1, 0) != 0.0) reject("I(1,0)=0", 1, 0);
  for (std::size_t j = 0; j < n; ++j)
    if (at(0, j) != 1.0) reject("left boundary I(0,y)=1", 0, grid[j]);
  for (std::size_t i = 0; i < n; ++i)
    if (at(i, n - 1) != 1.0) reject("right boundary I(x,1)=1", grid[i], 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j) > at(i - 1, j))
        reject("(I1) antitonicity in x", grid[i], grid[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (at(i, j) < at(i, j - 1))
        reject("(I2) monotonicity in y", grid[i], grid[j]);
}

Implication make_validated(BinaryFn fn, std::string desc);

}  // namespace

// ---------------------------------------------------------------------------
// Copula

Copula::Copula(std::function<double(double, double)> fn,
               std::function<double(double, double)> section, std::string desc)
    : fn_(std::move(fn)), section_(std::move(section)), desc_(std::move(desc)) {
  if (!section_)
    section_ = [f = fn_](double x, double y) { return f(x, y) / x; };
}

namespace {

void require_copula(const BinaryFn& fn, const std::string& desc) {
  const std::vector<double> grid = detail::validation_grid();
  const std::size_t n = grid.size();
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = fn(grid[i], grid[j]);
  const auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, 0) != 0.0 || at(0, i) != 0.0)
      detail::fail("copula " + desc + " is not grounded at " +
                   std::to_string(grid[i]));
    if (at(i, n - 1) != grid[i] || at(n - 1, i) != grid[i])
      detail::fail("copula " + desc + " lacks neutral element 1 at " +
                   std::to_string(grid[i]));
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const double defect =
          at(i, j) - at(i, j - 1) - at(i - 1, j) + at(i - 1, j - 1);
      if (defect < -1e-9)
        detail::fail("copula " + desc + " is not 2-increasing near (" +
                     std::to_string(grid[i]) + "," + std::to_string(grid[j]) +
                     ")");
    }
}

}  // namespace

Copula Copula::product() {
  BinaryFn fn = [](double x, double y) { return x * y; };
  require_copula(fn, "product");
  BinaryFn section = [](double, double y) { return y; };
  return Copula(std::move(fn), std::move(section), "product");
}

Copula Copula::lukasiewicz() {
  BinaryFn fn = [](double x, double y) {
    return std::max(x - (1.0 - y), 0.0);
  };
  require_copula(fn, "lukasiewicz");
  return Copula(std::move(fn), nullptr, "lukasiewicz");
}

Copula Copula::archimedean(Generator additive) {
  require_copula_generator(additive);
  const Generator c = std::move(additive);
  BinaryFn fn = [c](double x, double y) {
    if (x == 0.0 || y == 0.0) return 0.0;
    if (x == 1.0) return y;
    if (y == 1.0) return x;
    return clamp01(c.pseudo_inverse(c(x) + c(y)));
  };
  const std::string desc = "archimedean(" + c.describe() + ")";
  require_copula(fn, desc);
  return Copula(std::move(fn), nullptr, desc);
}

// ---------------------------------------------------------------------------
// Implication

Implication::Implication(std::function<double(double, double)> fn,
                         std::string desc)
    : fn_(std::move(fn)), desc_(std::move(desc)) {}

namespace {
Implication make_validated(BinaryFn fn, std::string desc) {
  require_implication_axioms(fn, desc);
  return Implication::from_binary(std::move(fn), std::move(desc));
}
}  // namespace

Implication Implication::from_binary(std::function<double(double, double)> fn,
                                     std::string desc) {
  return Implication(std::move(fn), std::move(desc));
}

Implication Implication::lukasiewicz() {
  return make_validated(
      [](double x, double y) { return std::min((1.0 - x) + y, 1.0); },
      "lukasiewicz");
}

Implication Implication::reichenbach() {
  return make_validated(
      [](double x, double y) { return (1.0 - x) + x * y; }, "reichenbach");
}

Implication Implication::residual(Aggregator a) {
  auto fn = [a](double x, double y) {
    return detail::sup_of_lower_interval(
        [&](double t) { return a(x, t) <= y; });
  };
  return make_validated(std::move(fn), "residual(" + a.describe() + ")");
}

Implication Implication::an_implication(Aggregator a, Negation n) {
  if (a(1.0, 0.0) != 1.0 || a(0.0, 1.0) != 1.0)
    detail::fail("(A,N)-implication needs a disjunctor, got " + a.describe());
  auto fn = [a, n](double x, double y) { return a(n(x), y); };
  return make_validated(std::move(fn), "an-implication(" + a.describe() + "," +
                                           n.describe() + ")");
}

Implication Implication::ql_operation(Aggregator a1, Aggregator a2,
                                      Negation n) {
  auto fn = [a1, a2, n](double x, double y) { return a1(n(x), a2(x, y)); };
  return make_validated(std::move(fn),
                        "ql(" + a1.describe() + "," + a2.describe() + "," +
                            n.describe() + ")");
}

Implication Implication::f_implication(Generator f) {
  require_f_generator(f);
  auto fn = [f](double x, double y) {
    if (x == 0.0) return 1.0;  // 0 * inf = 0
    return clamp01(f.pseudo_inverse(x * f(y)));
  };
  return make_validated(std::move(fn), "f-implication(" + f.describe() + ")");
}

Implication Implication::g_implication(Generator g) {
  require_g_generator(g);
  auto fn = [g](double x, double y) {
    if (x == 0.0) return 1.0;  // g(y)/0 = inf
    return clamp01(g.pseudo_inverse(g(y) / x));
  };
  return make_validated(std::move(fn), "g-implication(" + g.describe() + ")");
}

Implication Implication::t_power_min() {
  return make_validated(
      [](double x, double y) { return x <= y ? 1.0 : 0.0; }, "t-power(min)");
}

Implication Implication::t_power(Generator t) {
  require_tnorm_generator(t);
  auto fn = [t](double x, double y) {
    if (x <= y) return 1.0;
    const double denom = t(y);  // y < x <= 1, so t(y) > 0
    const double num = t(x);
    if (denom == kInf) return 0.0;
    return clamp01(num / denom);
  };
  return make_validated(std::move(fn), "t-power(" + t.describe() + ")");
}

Implication Implication::probabilistic(Copula c) {
  auto fn = [c](double x, double y) {
    if (x == 0.0) return 1.0;
    return clamp01(c.section_ratio(x, y));
  };
  return make_validated(std::move(fn),
                        "probabilistic(" + c.describe() + ")");
}

Implication Implication::probabilistic_s(Copula c) {
  auto fn = [c](double x, double y) {
    return clamp01((1.0 - x) + c(x, y));
  };
  return make_validated(std::move(fn),
                        "probabilistic-s(" + c.describe() + ")");
}

Implication Implication::tabulated(std::vector<double> x,
                                   std::vector<double> y,
                                   std::vector<double> value) {
  detail::require_axis(x, "implication");
  detail::require_axis(y, "implication");
  if (value.size() != x.size() * y.size())
    detail::fail("implication: sample matrix has wrong size");
  auto table = std::make_shared<const detail::Pwl2d>(
      detail::Pwl2d{std::move(x), std::move(y), std::move(value)});
  auto fn = [table](double a, double b) { return (*table)(a, b); };
  return make_validated(std::move(fn),
                        "tabulated(" + std::to_string(table->xs.size()) + "x" +
                            std::to_string(table->ys.size()) + ")");
}

// ---------------------------------------------------------------------------
// Algebra

Implication meet(const Implication& i, const Implication& j) {
  auto fn = [i, j](double x, double y) { return std::min(i(x, y), j(x, y)); };
  return make_validated(std::move(fn),
                        "meet(" + i.describe() + "," + j.describe() + ")");
}

Implication join(const Implication& i, const Implication& j) {
  auto fn = [i, j](double x, double y) { return std::max(i(x, y), j(x, y)); };
  return make_validated(std::move(fn),
                        "join(" + i.describe() + "," + j.describe() + ")");
}

Implication conjugate(const Implication& i, const Automorphism& phi) {
  auto fn = [i, phi](double x, double y) {
    return phi.inverse(i(phi(x), phi(y)));
  };
  return make_validated(std::move(fn),
                        i.describe() + "_" + phi.describe());
}

Negation natural_negation(const Implication& i) {
  return Negation::from_unary([i](double x) { return i(x, 0.0); },
                              "natural-of(" + i.describe() + ")");
}

Implication contrapositivise(const Implication& i, const Negation& n,
                             ContrapositivisationSide side) {
  if (!n.is_strong())
    detail::fail("contrapositivisation needs a strong negation, " +
                 n.describe() + " is not involutive on the check grid");
  const bool lower = side == ContrapositivisationSide::Lower;
  auto fn = [i, n, lower](double x, double y) {
    const double nx = n(x);
    const bool own_branch = lower ? y >= nx : y <= nx;
    return own_branch ? i(x, y) : i(n(y), nx);
  };
  return make_validated(std::move(fn),
                        std::string(lower ? "lower" : "upper") +
                            "-contrapositivisation(" + i.describe() + "," +
                            n.describe() + ")");
}

// ---------------------------------------------------------------------------
// Profile

namespace {
std::vector<double> coarsen(const std::vector<double>& pts, std::size_t m) {
  if (pts.size() <= m) return pts;
  std::vector<double> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k)
    out.push_back(pts[k * (pts.size() - 1) / (m - 1)]);
  return out;
}
}  // namespace

ImplicationProfile profile_implication(const Implication& i, const Negation& n,
                                       std::vector<double> grid_points,
                                       double tol) {
  std::sort(grid_points.begin(), grid_points.end());
  if (grid_points.empty() || grid_points.front() != 0.0 ||
      grid_points.back() != 1.0)
    detail::fail("profile grid must contain 0 and 1");

  ImplicationProfile p;
  p.grid = "uniform-" + std::to_string(grid_points.size()) + "[0,1]";
  p.np = p.ip = p.op = p.cp_with_n = p.lb = p.rb = true;

  for (const double x : grid_points) {
    if (p.np && !near(i(1.0, x), x, tol)) {
      p.np = false;
      p.np_failure = x;
    }
    if (p.ip && !near(i(x, x), 1.0, tol)) {
      p.ip = false;
      p.ip_failure = x;
    }
    if (p.lb && !near(i(0.0, x), 1.0, tol)) {
      p.lb = false;
      p.lb_failure = x;
    }
    if (p.rb && !near(i(x, 1.0), 1.0, tol)) {
      p.rb = false;
      p.rb_failure = x;
    }
  }

  for (const double x : grid_points) {
    for (const double y : grid_points) {
      const bool one = i(x, y) >= 1.0 - tol;
      if (p.op && one != (x <= y)) {
        p.op = false;
        p.op_failure = {{x, y}};
      }
      if (p.cp_with_n && !near(i(x, y), i(n(y), n(x)), tol)) {
        p.cp_with_n = false;
        p.cp_failure = {{x, y}};
      }
    }
  }

  const std::vector<double> sub = coarsen(grid_points, 21);
  for (const double x : sub)
    for (const double y : sub) {
      for (const double z : sub) {
        if (!near(i(x, i(y, z)), i(y, i(x, z)), tol)) {
          p.ep = false;
          p.ep_failure = {{x, y, z}};
          break;
        }
      }
      if (p.ep_failure) break;
    }
  p.ep = !p.ep_failure.has_value();

  return p;
}

ImplicationProfile profile_implication(const Implication& i, const Negation& n,
                                       double tol) {
  return profile_implication(i, n, detail::validation_grid(), tol);
}

}  // namespace acri
