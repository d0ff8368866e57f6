#include "sqbath/bath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sqbath {

namespace {

void require_r(double r, const char* who) {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << who << ": squeeze strength out of range, r must lie in [0, 1], got " << r;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

SqueezeFactors squeeze_factors(double r, double theta) {
  require_r(r, "squeeze_factors");
  SqueezeFactors f;
  f.u = std::cosh(r);
  f.w = std::sinh(r);
  f.v = f.w * std::exp(Complex(0.0, theta));
  return f;
}

void SqueezedBathSpec::validate() const {
  if (!(coupling_strength >= 0.0))
    throw std::invalid_argument("SqueezedBathSpec: Gamma must satisfy Gamma >= 0");
  if (!(bandwidth > 0.0))
    throw std::invalid_argument("SqueezedBathSpec: bandwidth gamma must be > 0");
  require_r(squeeze_strength, "SqueezedBathSpec");
  if (lindblad.rows() < 1 || lindblad.rows() != lindblad.cols())
    throw std::invalid_argument("SqueezedBathSpec: lindblad must be square with dim >= 1");
  const double herm = hermiticity_error(lindblad);
  if (herm > 1e-12) {
    std::ostringstream msg;
    msg << "SqueezedBathSpec: lindblad must be Hermitian, max |L - L^dag| = " << herm;
    throw std::invalid_argument(msg.str());
  }
}

Complex alpha1_coeff(const SqueezedBathSpec& spec) {
  const auto f = squeeze_factors(spec.squeeze_strength, spec.squeeze_direction);
  const double scale = 0.5 * spec.bandwidth * spec.coupling_strength;
  return scale * (f.u * f.u - f.v * f.u);
}

Complex alpha2_coeff(const SqueezedBathSpec& spec) {
  const auto f = squeeze_factors(spec.squeeze_strength, spec.squeeze_direction);
  const double scale = 0.5 * spec.bandwidth * spec.coupling_strength;
  return scale * (std::norm(f.v) - std::conj(f.v) * f.u);
}

Complex alpha1_kernel(const SqueezedBathSpec& spec, double t, double s) {
  if (t < 0.0 || s < 0.0) throw std::invalid_argument("alpha1_kernel: t and s must be >= 0");
  const auto f = squeeze_factors(spec.squeeze_strength, spec.squeeze_direction);
  const double scale = 0.5 * spec.bandwidth * spec.coupling_strength;
  const double w0 = spec.center_frequency;
  const Complex prefactor = f.u * f.u - f.v * f.u * std::exp(Complex(0.0, -2.0 * w0 * s));
  const Complex envelope =
      std::exp(Complex(-spec.bandwidth * std::abs(t - s), -w0 * (t - s)));
  return scale * prefactor * envelope;
}

Complex alpha2_kernel(const SqueezedBathSpec& spec, double t, double s) {
  if (t < 0.0 || s < 0.0) throw std::invalid_argument("alpha2_kernel: t and s must be >= 0");
  const auto f = squeeze_factors(spec.squeeze_strength, spec.squeeze_direction);
  const double scale = 0.5 * spec.bandwidth * spec.coupling_strength;
  const double w0 = spec.center_frequency;
  const Complex prefactor =
      std::norm(f.v) - std::conj(f.v) * f.u * std::exp(Complex(0.0, 2.0 * w0 * t));
  const Complex envelope =
      std::exp(Complex(-spec.bandwidth * std::abs(t - s), w0 * (t - s)));
  return scale * prefactor * envelope;
}

double variance_p_exact(double r, double theta) {
  require_r(r, "variance_p_exact");
  const double u = std::cosh(r), w = std::sinh(r);
  return 0.25 * (u * u + w * w - 2.0 * u * w * std::cos(theta));
}

double variance_x_exact(double r, double theta) {
  require_r(r, "variance_x_exact");
  const double u = std::cosh(r), w = std::sinh(r);
  return 0.25 * (u * u + w * w + 2.0 * u * w * std::cos(theta));
}

double variance_p_taylor(double r, double theta) {
  require_r(r, "variance_p_taylor");
  return 0.125 * (2.0 - 4.0 * r * std::cos(theta) + 4.0 * r * r);
}

double variance_x_taylor(double r, double theta) {
  require_r(r, "variance_x_taylor");
  return 0.125 * (2.0 + 4.0 * r * std::cos(theta) + 4.0 * r * r);
}

CriticalR critical_r(double theta) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (theta < 0.0 || theta > half_pi) return {0.0, false};  // no peak regime
  const double value = 1.0 - 2.0 * theta / std::numbers::pi;
  return {std::clamp(value, 0.0, 1.0), true};
}

}  // namespace sqbath
