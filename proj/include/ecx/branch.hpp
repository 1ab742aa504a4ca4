#pragma once

#include <complex>

#include "ecx/params.hpp"

namespace ecx::branch {

using complex = std::complex<double>;

/// Segment of the imaginary axis between -i sqrt(b/a) and +i sqrt(b/a).
struct Slit {
  double half_height = 0.0;
};

Slit slit_of(const Params& p);

double distance_to_slit(complex zeta, const Params& p);

inline constexpr double kSlitProximity = 1e-12;

/// Branch w of sqrt(a zeta^2 + b) on the plane cut along the slit, positive
/// for large real zeta. Requires b > 0 and zeta at least 1e-12 away from the
/// slit.
complex sqrt_branch(complex zeta, const Params& p);

struct HarmonicPair {
  double u = 0.0;
  double v = 0.0;
};

/// Real and imaginary parts of w(zeta) + lambda zeta.
HarmonicPair uv(complex zeta, const Params& p, double lambda);

/// rho = b |w(zeta) + sqrt(a) zeta|^-2.
double rho(complex zeta, const Params& p);

/// v evaluated through rho: (sqrt(a) (1 - rho)/(1 + rho) + lambda) Im zeta.
double v_via_rho(complex zeta, const Params& p, double lambda);

/// d/dzeta [w(zeta) + lambda zeta] = a zeta / w(zeta) + lambda.
complex exponent_derivative(complex zeta, const Params& p, double lambda);

/// Level set {v = 0} off the real axis for a fixed lambda in (-sqrt(a), 0):
/// the ellipse xi^2/A^2 + eta^2/B^2 = 1 through the critical points +-A.
struct EllipseContour {
  double lambda = 0.0;
  double A = 0.0;
  double B = 0.0;
  double zeta_plus = 0.0;
  double zeta_minus = 0.0;
};

EllipseContour ellipse_for(double lambda, const Params& p);

/// A cos(theta) + i B sin(theta); counterclockwise as theta increases.
complex ellipse_point(const EllipseContour& c, double theta);

/// Max |v| over n equally spaced angles on the ellipse, skipping angles
/// within 1e-3 of 0 and pi.
double verify_level_set(const EllipseContour& c, const Params& p, int n_samples);

/// Derivative of v along the exterior unit normal of the ellipse at angle theta.
double normal_derivative_v(const EllipseContour& c, const Params& p, double theta);

}  // namespace ecx::branch
