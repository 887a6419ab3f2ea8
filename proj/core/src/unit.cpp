#include "acri/unit.hpp"

#include <iostream>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace acri {

UnitValue::UnitValue(double v) : v_(v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("membership degree " + std::to_string(v) +
                                " outside [0,1]");
}

namespace {
std::function<void(std::string_view)>& handler() {
  static std::function<void(std::string_view)> h;
  return h;
}
std::mutex& handler_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void warn(std::string_view message) {
  std::function<void(std::string_view)> h;
  {
    std::lock_guard<std::mutex> lock(handler_mutex());
    h = handler();
  }
  if (h)
    h(message);
  else
    std::cerr << "warning: " << message << '\n';
}

void set_warning_handler(std::function<void(std::string_view)> h) {
  std::lock_guard<std::mutex> lock(handler_mutex());
  handler() = std::move(h);
}

namespace detail {

namespace {
double snap_endpoint(double v) {
  if (v < 1e-15) return 0.0;
  if (v > 1.0 - 1e-15) return 1.0;
  return v;
}
}  // namespace

double sup_of_lower_interval(const std::function<bool(double)>& pred,
                             int iterations) {
  if (pred(1.0)) return 1.0;
  if (!pred(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;  // pred(lo) true, pred(hi) false
  for (int k = 0; k < iterations; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  // Ties at discontinuities resolve to the supremum side.
  return snap_endpoint(hi);
}

double inf_of_upper_interval(const std::function<bool(double)>& pred,
                             int iterations) {
  if (pred(0.0)) return 0.0;
  if (!pred(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;  // pred(lo) false, pred(hi) true
  for (int k = 0; k < iterations; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return snap_endpoint(hi);
}

void fail(const std::string& message) { throw std::invalid_argument(message); }

}  // namespace detail

}  // namespace acri
