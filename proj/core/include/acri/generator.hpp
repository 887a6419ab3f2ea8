#ifndef ACRI_GENERATOR_HPP
#define ACRI_GENERATOR_HPP

#include <string>

namespace acri {

/// Continuous strictly monotone unary function on [0,1] from a named
/// closed-form catalog, with analytic inverse and range-clamping
/// pseudo-inverse. Generators drive the f-/g-implications, the additive
/// t-norm/t-conorm forms, Archimedean copulas and the representable
/// aggregators.
class Generator {
public:
  enum class Form {
    OneMinusX,       // 1-x            decreasing, 1 -> 0
    NegLog,          // -ln x          decreasing, +inf -> 0
    Identity,        // x              increasing, 0 -> 1
    NegLogOneMinus,  // -ln(1-x)       increasing, 0 -> +inf
    Power,           // x^p            increasing, 0 -> 1
    OneMinusPower,   // (1-x)^p        decreasing, 1 -> 0
    Clayton,         // (x^-t - 1)/t   decreasing, +inf -> 0
    Logit,           // ln(x/(1-x))    increasing, -inf -> +inf
  };

  static Generator one_minus_x();
  static Generator neg_log();
  static Generator identity();
  static Generator neg_log_one_minus();
  static Generator power(double exponent);
  static Generator one_minus_power(double exponent);
  static Generator clayton(double theta);
  static Generator logit();

  /// Value at x in [0,1]; endpoints may map to +-infinity.
  double operator()(double x) const;

  /// Exact inverse; caller guarantees v lies in the range.
  double inverse(double v) const;

  /// Inverse after clamping v into the closed range of the generator.
  /// This realizes the pseudo-inverse conventions: values beyond the
  /// reachable range map to the corresponding endpoint of [0,1].
  double pseudo_inverse(double v) const;

  bool increasing() const { return increasing_; }
  double value_at_zero() const { return (*this)(0.0); }
  double value_at_one() const { return (*this)(1.0); }

  Form form() const { return form_; }
  double parameter() const { return param_; }
  const std::string& describe() const { return desc_; }

private:
  Generator(Form f, double param, bool inc, std::string desc);

  Form form_;
  double param_ = 0.0;
  bool increasing_ = false;
  std::string desc_;
};

/// Kind-specific validations: strict monotonicity of the declared
/// direction on a 1001-point grid plus the endpoint conventions.
/// Each throws std::invalid_argument on violation.
void require_f_generator(const Generator& g);        // decreasing, g(1)=0
void require_g_generator(const Generator& g);        // increasing, g(0)=0
void require_tnorm_generator(const Generator& g);    // decreasing, g(1)=0
void require_tconorm_generator(const Generator& g);  // increasing, g(0)=0
void require_copula_generator(const Generator& g);   // decreasing, g(1)=0
void require_representable_generator(const Generator& g);  // g(0)<0<g(1)

}  // namespace acri

#endif
