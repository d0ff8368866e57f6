#pragma once

// Squeezed-bath parameterization: squeeze factors, correlation-function
// coefficients and full kernels, quadrature variances (exact and Taylor)
// and the critical squeezing strength of the fidelity peak.
//
// Conventions: theta = 0 squeezes the p-quadrature, theta = pi the
// x-quadrature. The coupled evolution equations consume only the t = s = 0
// coefficients; the full kernels are exposed for diagnostics and tests.

#include "sqbath/operators.hpp"

namespace sqbath {

// u = cosh r, w = sinh r, v = w e^{i theta}; u^2 - |v|^2 = 1.
struct SqueezeFactors {
  double u = 1.0;
  Complex v{0.0, 0.0};
  double w = 0.0;
};

SqueezeFactors squeeze_factors(double r, double theta);

struct SqueezedBathSpec {
  double coupling_strength = 0.0;  // Gamma >= 0
  double bandwidth = 1.0;          // gamma > 0 (Lorentzian spectral width)
  double center_frequency = 0.0;   // omega0
  double squeeze_strength = 0.0;   // r in [0, 1]
  double squeeze_direction = 0.0;  // theta in [0, 2pi)
  Operator lindblad;               // Hermitian coupling operator

  void validate() const;  // throws invalid_argument naming the violated invariant
};

// Correlation-function coefficients at t = s = 0; these feed the memory
// operator evolution equations.
Complex alpha1_coeff(const SqueezedBathSpec& spec);
Complex alpha2_coeff(const SqueezedBathSpec& spec);

// Full non-stationary kernels. Diagnostic use only.
Complex alpha1_kernel(const SqueezedBathSpec& spec, double t, double s);
Complex alpha2_kernel(const SqueezedBathSpec& spec, double t, double s);

// Quadrature variances, exact and the cubic-truncation Taylor forms.
double variance_p_exact(double r, double theta);
double variance_x_exact(double r, double theta);
double variance_p_taylor(double r, double theta);
double variance_x_taylor(double r, double theta);

// Squeezing strength at which the fidelity peaks: r = 1 - 2 theta / pi,
// valid for theta in [0, pi/2]. Outside that range no peak exists and the
// value is a flagged zero so sweeps can annotate instead of aborting.
struct CriticalR {
  double value = 0.0;
  bool peak_regime = false;
};

CriticalR critical_r(double theta);

}  // namespace sqbath
