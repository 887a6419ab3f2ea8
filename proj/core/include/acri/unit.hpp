#ifndef ACRI_UNIT_HPP
#define ACRI_UNIT_HPP

#include <functional>
#include <string>
#include <string_view>

namespace acri {

/// A membership degree. Construction rejects values outside [0,1].
class UnitValue {
public:
  UnitValue() = default;
  explicit UnitValue(double v);

  double value() const { return v_; }
  operator double() const { return v_; }

private:
  double v_ = 0.0;
};

/// Clamps small numeric drift back into [0,1].
inline double clamp01(double v) {
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

/// Rounds v onto the 2^-53 lattice of [0,1].
///
/// Every lattice point p has 1-p exactly representable, so the standard
/// negation is an exact involution on lattice points. Uniform check grids
/// are built from snapped points, which is what makes the "worst violation
/// is exactly zero" contracts of the conformance checks meaningful.
inline double snap01(double v) {
  v = clamp01(v);
  const double w = 1.0 - v;
  return 1.0 - w;
}

/// True if |a-b| <= tol, with tol = 0 meaning bitwise-equal values.
inline bool near(double a, double b, double tol) {
  const double d = a > b ? a - b : b - a;
  return d <= tol;
}

/// Non-fatal diagnostics (non-normal inference inputs, weak preconditions).
/// Default handler writes to stderr.
void warn(std::string_view message);
void set_warning_handler(std::function<void(std::string_view)> handler);

namespace detail {

/// Largest t in [0,1] with pred(t), assuming {t : pred(t)} is a lower
/// interval. Returns 0 for an empty set. Results within 1e-15 of an
/// endpoint snap to it.
double sup_of_lower_interval(const std::function<bool(double)>& pred,
                             int iterations = 60);

/// Smallest c in [0,1] with pred(c), assuming {c : pred(c)} is an upper
/// interval. Returns 1 for an empty set.
double inf_of_upper_interval(const std::function<bool(double)>& pred,
                             int iterations = 60);

/// Throws std::invalid_argument with the given message.
[[noreturn]] void fail(const std::string& message);

}  // namespace detail

}  // namespace acri

#endif
