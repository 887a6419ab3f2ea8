#include "acri/conformance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace acri {

// ---------------------------------------------------------------------------
// Grid

Grid::Grid(std::vector<double> pts, std::string desc)
    : points_(std::move(pts)), desc_(std::move(desc)) {}

Grid Grid::uniform(std::size_t n) {
  if (n < 2) detail::fail("grid needs >= 2 points");
  std::vector<double> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    pts.push_back(snap01(static_cast<double>(k) / (n - 1)));
  return Grid(std::move(pts), "uniform-" + std::to_string(n) + "[0,1]");
}

Grid Grid::of(std::vector<double> points) {
  for (const double p : points) (void)UnitValue(p);
  points.push_back(0.0);
  points.push_back(1.0);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const auto n = points.size();
  return Grid(std::move(points), "custom-" + std::to_string(n) + "[0,1]");
}

Grid Grid::coarsened(std::size_t max_points) const {
  if (points_.size() <= max_points) return *this;
  std::vector<double> pts;
  pts.reserve(max_points);
  for (std::size_t k = 0; k < max_points; ++k)
    pts.push_back(points_[k * (points_.size() - 1) / (max_points - 1)]);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return Grid(std::move(pts),
              desc_ + "/coarse-" + std::to_string(max_points));
}

// ---------------------------------------------------------------------------
// CheckReport

std::string CheckReport::csv_line() const {
  std::ostringstream os;
  os.precision(12);
  os << law << ',' << (pass ? "pass" : "fail") << ',' << worst_violation
     << ',';
  if (!witness.empty()) {
    os << '"' << '(';
    for (std::size_t k = 0; k < witness.size(); ++k)
      os << (k ? "," : "") << witness[k];
    os << ')';
    if (!witness_note.empty()) os << ' ' << witness_note;
    os << '"';
  } else if (!witness_note.empty()) {
    os << '"' << witness_note << '"';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Binary law checks

namespace {

CheckReport scan_pairs(const std::string& law, const Grid& grid, double tol,
                       const std::function<double(double, double)>& defect) {
  CheckReport r;
  r.law = law;
  r.grid = grid.describe();
  r.tolerance = tol;
  for (const double x : grid.points())
    for (const double y : grid.points()) {
      const double v = defect(x, y);
      if (v > r.worst_violation) {
        r.worst_violation = v;
        r.witness = {x, y};
      }
    }
  r.pass = r.worst_violation <= tol;
  return r;
}

}  // namespace

CheckReport check_ac_fn(const BinaryFn& a, const BinaryFn& i, const Grid& grid,
                        double tol) {
  return scan_pairs("ac", grid, tol, [&](double x, double y) {
    return a(x, i(x, y)) - y;
  });
}

CheckReport check_ac(const Aggregator& a, const Implication& i,
                     const Grid& grid, double tol) {
  return check_ac_fn(a.fn(), i.fn(), grid, tol);
}

CheckReport check_dac_fn(const BinaryFn& a, const BinaryFn& i,
                         const std::function<double(double)>& n,
                         const Grid& grid, double tol) {
  return scan_pairs("dac", grid, tol, [&](double x, double y) {
    return a(n(y), i(x, y)) - n(x);
  });
}

CheckReport check_dac(const Aggregator& a, const Implication& i,
                      const Negation& n, const Grid& grid, double tol) {
  return check_dac_fn(
      a.fn(), i.fn(), [n](double x) { return n(x); }, grid, tol);
}

CheckReport check_lia(const Aggregator& a, const Implication& i,
                      const Grid& grid, double tol) {
  const Grid sub = grid.coarsened(21);
  CheckReport r;
  r.law = "lia";
  r.grid = sub.describe();
  r.tolerance = tol;
  for (const double x : sub.points())
    for (const double y : sub.points())
      for (const double z : sub.points()) {
        const double v = std::abs(i(a(x, y), z) - i(x, i(y, z)));
        if (v > r.worst_violation) {
          r.worst_violation = v;
          r.witness = {x, y, z};
        }
      }
  r.pass = r.worst_violation <= tol;
  return r;
}

CheckReport check_cpn(const Implication& i, const Negation& n,
                      const Grid& grid, double tol) {
  CheckReport r = scan_pairs("cpn", grid, tol, [&](double x, double y) {
    return std::abs(i(x, y) - i(n(y), n(x)));
  });
  return r;
}

// ---------------------------------------------------------------------------
// Axioms

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
    case Axiom::A6: return "A6";
    case Axiom::A7: return "A7";
    case Axiom::A8: return "A8";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), ::toupper);
  for (const Axiom a : {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5,
                        Axiom::A6, Axiom::A7, Axiom::A8})
    if (s == axiom_name(a)) return a;
  return std::nullopt;
}

namespace {

FuzzySet map_memberships(const FuzzySet& s,
                         const std::function<double(double)>& m) {
  std::vector<double> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = clamp01(m(s[k]));
  return FuzzySet(s.universe(), std::move(out));
}

/// Worst pointwise excess of want over got (for subset-style axioms) or
/// absolute difference (equality-style).
struct Deviation {
  double worst = 0.0;
  std::size_t index = 0;
};

Deviation excess(const FuzzySet& lower, const FuzzySet& upper) {
  Deviation d;
  for (std::size_t k = 0; k < lower.size(); ++k) {
    const double v = lower[k] - upper[k];
    if (v > d.worst) {
      d.worst = v;
      d.index = k;
    }
  }
  return d;
}

Deviation difference(const FuzzySet& a, const FuzzySet& b) {
  Deviation d;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double v = std::abs(a[k] - b[k]);
    if (v > d.worst) {
      d.worst = v;
      d.index = k;
    }
  }
  return d;
}

}  // namespace

std::vector<CheckReport> check_axioms(const Aggregator& a,
                                      const Implication& i, const Negation& n,
                                      std::span<const AxiomInstance> instances,
                                      const std::set<Axiom>& which,
                                      const AxiomCheckOptions& options) {
  std::function<double(double)> very = options.very;
  if (!very) very = [](double v) { return v * v; };
  std::function<double(double)> more_or_less = options.more_or_less;
  if (!more_or_less) more_or_less = [](double v) { return std::sqrt(v); };

  std::vector<CheckReport> reports;
  std::size_t idx = 0;
  for (const auto& inst : instances) {
    const Rule& rule = inst.rule;
    if (!rule.antecedent.is_normal() || !rule.consequent.is_normal())
      warn("axiom instance " + std::to_string(idx) + ": rule is not normal");
    const std::string tag =
        inst.name.empty() ? "instance " + std::to_string(idx) : inst.name;

    for (const Axiom ax : which) {
      CheckReport r;
      r.law = axiom_name(ax);
      r.tolerance = options.tol;
      r.grid = "instances";
      Deviation dev;
      std::string element;

      switch (ax) {
        case Axiom::A1: {
          const FuzzySet out =
              fmp_infer(a, i, rule, inst.input.value_or(rule.antecedent));
          dev = excess(rule.consequent, out);
          element = rule.consequent.universe()[dev.index];
          break;
        }
        case Axiom::A2: {
          if (!inst.input || !inst.input2)
            detail::fail("axiom A2 needs two inputs per instance");
          if (excess(*inst.input, *inst.input2).worst > 0.0)
            detail::fail("axiom A2 inputs must be nested: input <= input2");
          const FuzzySet out1 = fmp_infer(a, i, rule, *inst.input);
          const FuzzySet out2 = fmp_infer(a, i, rule, *inst.input2);
          dev = excess(out1, out2);
          element = rule.consequent.universe()[dev.index];
          break;
        }
        case Axiom::A3: {
          const FuzzySet out =
              fmp_infer(a, i, rule, complement(rule.antecedent, n));
          for (std::size_t k = 0; k < out.size(); ++k) {
            const double v = 1.0 - out[k];
            if (v > dev.worst) {
              dev.worst = v;
              dev.index = k;
            }
          }
          element = rule.consequent.universe()[dev.index];
          break;
        }
        case Axiom::A4: {
          const FuzzySet out =
              fmt_infer(a, i, rule, complement(rule.consequent, n));
          dev = difference(out, complement(rule.antecedent, n));
          element = rule.antecedent.universe()[dev.index];
          break;
        }
        case Axiom::A5: {
          const FuzzySet out = fmp_infer(a, i, rule, rule.antecedent);
          dev = difference(out, rule.consequent);
          element = rule.consequent.universe()[dev.index];
          break;
        }
        case Axiom::A6: {
          const FuzzySet out =
              fmp_infer(a, i, rule, map_memberships(rule.antecedent, very));
          dev = difference(out, map_memberships(rule.consequent, very));
          element = rule.consequent.universe()[dev.index];
          break;
        }
        case Axiom::A7: {
          const FuzzySet out = fmp_infer(
              a, i, rule, map_memberships(rule.antecedent, more_or_less));
          dev = difference(out, map_memberships(rule.consequent, more_or_less));
          element = rule.consequent.universe()[dev.index];
          break;
        }
        case Axiom::A8: {
          const FuzzySet out =
              fmp_infer(a, i, rule, complement(rule.antecedent, n));
          dev = difference(out, complement(rule.consequent, n));
          element = rule.consequent.universe()[dev.index];
          break;
        }
      }

      r.worst_violation = dev.worst;
      r.pass = dev.worst <= options.tol;
      if (!r.pass) r.witness_note = tag + ", element " + element;
      reports.push_back(std::move(r));
    }
    ++idx;
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Random instances

Rule make_random_rule(std::mt19937_64& rng, const RandomRuleOptions& options) {
  if (options.min_size < 3 || options.max_size < options.min_size)
    detail::fail("random rule sizes must satisfy 3 <= min <= max");
  std::uniform_int_distribution<std::size_t> size_dist(options.min_size,
                                                       options.max_size);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const auto make_set = [&](const char* prefix, bool zero, bool interior) {
    const std::size_t n = size_dist(rng);
    std::vector<std::string> labels(n);
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
      labels[k] = std::string(prefix) + std::to_string(k + 1);
      values[k] = snap01(unif(rng));
    }
    std::vector<std::size_t> slots(n);
    for (std::size_t k = 0; k < n; ++k) slots[k] = k;
    std::shuffle(slots.begin(), slots.end(), rng);
    values[slots[0]] = 1.0;  // normality
    if (zero) values[slots[1]] = 0.0;
    if (interior) values[slots[2]] = snap01(0.25 + 0.5 * unif(rng));
    return FuzzySet(std::move(labels), std::move(values));
  };

  FuzzySet antecedent = make_set("u", false, false);
  FuzzySet consequent = make_set("v", options.force_zero_consequent,
                                 options.force_interior_consequent);
  return Rule{std::move(antecedent), std::move(consequent)};
}

}  // namespace acri
