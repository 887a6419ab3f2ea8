#ifndef ACRI_SRC_INTERP_HPP
#define ACRI_SRC_INTERP_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "acri/unit.hpp"

namespace acri::detail {

/// Piecewise-linear interpolation through sorted nodes; clamps outside.
inline double pwl(const std::vector<double>& xs, const std::vector<double>& ys,
                  double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  const std::size_t lo = hi - 1;
  if (x == xs[lo]) return ys[lo];
  const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + t * (ys[hi] - ys[lo]);
}

inline void require_axis(const std::vector<double>& xs, const char* what) {
  if (xs.size() < 2) fail(std::string(what) + ": need >= 2 samples");
  if (xs.front() != 0.0 || xs.back() != 1.0)
    fail(std::string(what) + ": sample axis must span [0,1]");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1]))
      fail(std::string(what) + ": sample axis must strictly increase");
}

/// Endpoint-exact linear blend; flat segments return the nodal value
/// bit-for-bit, which keeps tabulated operators exactly monotone.
inline double lerp_exact(double p, double q, double t) {
  if (t <= 0.0) return p;
  if (t >= 1.0) return q;
  return p + t * (q - p);
}

/// Bilinear interpolation through a row-major sample matrix.
struct Pwl2d {
  std::vector<double> xs, ys, values;  // values[i*ys.size()+j] = f(xs[i], ys[j])

  double at(std::size_t i, std::size_t j) const {
    return values[i * ys.size() + j];
  }

  double operator()(double x, double y) const {
    const auto cell = [](const std::vector<double>& axis, double v) {
      if (v <= axis.front()) return std::size_t{0};
      if (v >= axis[axis.size() - 2]) return axis.size() - 2;
      const auto it = std::upper_bound(axis.begin(), axis.end(), v);
      return static_cast<std::size_t>(it - axis.begin()) - 1;
    };
    const std::size_t i = cell(xs, x), j = cell(ys, y);
    const double tx = (x - xs[i]) / (xs[i + 1] - xs[i]);
    const double ty = (y - ys[j]) / (ys[j + 1] - ys[j]);
    const double lo = lerp_exact(at(i, j), at(i + 1, j), tx);
    const double hi = lerp_exact(at(i, j + 1), at(i + 1, j + 1), tx);
    return lerp_exact(lo, hi, ty);
  }
};

}  // namespace acri::detail

#endif
