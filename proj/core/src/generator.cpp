#include "acri/generator.hpp"

#include <cmath>
#include <limits>

#include "acri/unit.hpp"

namespace acri {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Generator::Generator(Form f, double param, bool inc, std::string desc)
    : form_(f), param_(param), increasing_(inc), desc_(std::move(desc)) {}

Generator Generator::one_minus_x() {
  return Generator(Form::OneMinusX, 0.0, false, "one-minus-x");
}
Generator Generator::neg_log() {
  return Generator(Form::NegLog, 0.0, false, "neg-log");
}
Generator Generator::identity() {
  return Generator(Form::Identity, 0.0, true, "identity");
}
Generator Generator::neg_log_one_minus() {
  return Generator(Form::NegLogOneMinus, 0.0, true, "neg-log-one-minus");
}
Generator Generator::power(double exponent) {
  if (!(exponent > 0.0))
    detail::fail("power generator needs a positive exponent");
  return Generator(Form::Power, exponent, true,
                   "power(" + std::to_string(exponent) + ")");
}
Generator Generator::one_minus_power(double exponent) {
  if (!(exponent > 0.0))
    detail::fail("one-minus-power generator needs a positive exponent");
  return Generator(Form::OneMinusPower, exponent, false,
                   "one-minus-power(" + std::to_string(exponent) + ")");
}
Generator Generator::clayton(double theta) {
  if (!(theta > 0.0)) detail::fail("clayton generator needs theta > 0");
  return Generator(Form::Clayton, theta, false,
                   "clayton(" + std::to_string(theta) + ")");
}
Generator Generator::logit() {
  return Generator(Form::Logit, 0.0, true, "logit");
}

double Generator::operator()(double x) const {
  switch (form_) {
    case Form::OneMinusX:
      return 1.0 - x;
    case Form::NegLog:
      return x == 0.0 ? kInf : -std::log(x);
    case Form::Identity:
      return x;
    case Form::NegLogOneMinus:
      return x == 1.0 ? kInf : -std::log1p(-x);
    case Form::Power:
      return std::pow(x, param_);
    case Form::OneMinusPower:
      return std::pow(1.0 - x, param_);
    case Form::Clayton:
      return x == 0.0 ? kInf : (std::pow(x, -param_) - 1.0) / param_;
    case Form::Logit:
      if (x == 0.0) return -kInf;
      if (x == 1.0) return kInf;
      return std::log(x / (1.0 - x));
  }
  return 0.0;
}

double Generator::inverse(double v) const {
  switch (form_) {
    case Form::OneMinusX:
      return 1.0 - v;
    case Form::NegLog:
      return std::exp(-v);
    case Form::Identity:
      return v;
    case Form::NegLogOneMinus:
      return -std::expm1(-v);
    case Form::Power:
      return std::pow(v, 1.0 / param_);
    case Form::OneMinusPower:
      return 1.0 - std::pow(v, 1.0 / param_);
    case Form::Clayton:
      return std::pow(1.0 + param_ * v, -1.0 / param_);
    case Form::Logit:
      if (v == -kInf) return 0.0;
      if (v == kInf) return 1.0;
      return 1.0 / (1.0 + std::exp(-v));
  }
  return 0.0;
}

double Generator::pseudo_inverse(double v) const {
  const double at0 = value_at_zero();
  const double at1 = value_at_one();
  if (increasing_) {
    if (v >= at1) return 1.0;
    if (v <= at0) return 0.0;
  } else {
    if (v >= at0) return 0.0;
    if (v <= at1) return 1.0;
  }
  return clamp01(inverse(v));
}

namespace {

void require_strictly_monotone(const Generator& g) {
  const int n = 1001;
  double prev = g(0.0);
  for (int k = 1; k < n; ++k) {
    const double x = static_cast<double>(k) / (n - 1);
    const double cur = g(x);
    const bool ok = g.increasing() ? cur > prev : cur < prev;
    if (!ok)
      detail::fail("generator " + g.describe() +
                   " is not strictly monotone near x=" + std::to_string(x));
    prev = cur;
  }
}

void require_endpoint(const Generator& g, double x, double want,
                      const char* what) {
  if (g(x) != want)
    detail::fail("generator " + g.describe() + " violates " + what);
}

}  // namespace

void require_f_generator(const Generator& g) {
  if (g.increasing())
    detail::fail("f-generator must be decreasing: " + g.describe());
  require_strictly_monotone(g);
  require_endpoint(g, 1.0, 0.0, "f(1)=0");
}

void require_g_generator(const Generator& g) {
  if (!g.increasing())
    detail::fail("g-generator must be increasing: " + g.describe());
  require_strictly_monotone(g);
  require_endpoint(g, 0.0, 0.0, "g(0)=0");
}

void require_tnorm_generator(const Generator& g) {
  if (g.increasing())
    detail::fail("t-norm additive generator must be decreasing: " +
                 g.describe());
  require_strictly_monotone(g);
  require_endpoint(g, 1.0, 0.0, "t(1)=0");
}

void require_tconorm_generator(const Generator& g) {
  if (!g.increasing())
    detail::fail("t-conorm additive generator must be increasing: " +
                 g.describe());
  require_strictly_monotone(g);
  require_endpoint(g, 0.0, 0.0, "s(0)=0");
}

void require_copula_generator(const Generator& g) {
  if (g.increasing())
    detail::fail("copula additive generator must be decreasing: " +
                 g.describe());
  require_strictly_monotone(g);
  require_endpoint(g, 1.0, 0.0, "c(1)=0");
}

void require_representable_generator(const Generator& g) {
  if (!g.increasing())
    detail::fail("representable generator must be increasing: " +
                 g.describe());
  require_strictly_monotone(g);
  if (!(g.value_at_zero() < 0.0 && g.value_at_one() > 0.0))
    detail::fail("representable generator must change sign on (0,1): " +
                 g.describe());
}

}  // namespace acri
