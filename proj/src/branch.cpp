#include "ecx/branch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ecx/error.hpp"

namespace ecx::branch {

Slit slit_of(const Params& p) { return Slit{p.slit_half_height()}; }

double distance_to_slit(complex zeta, const Params& p) {
  const double h = p.slit_half_height();
  const double x = zeta.real();
  const double y = zeta.imag();
  if (std::abs(y) <= h) return std::abs(x);
  return std::hypot(x, std::abs(y) - h);
}

complex sqrt_branch(complex zeta, const Params& p) {
  if (p.b() == 0.0) {
    throw NumericError(ErrorKind::degenerate_slit, "branch undefined for b = 0; use sqrt(a) zeta");
  }
  if (!(distance_to_slit(zeta, p) > kSlitProximity)) {
    throw NumericError(ErrorKind::branch_cut_proximity, "point lies on or next to the slit");
  }
  // The principal root of 1 + b/(a zeta^2) is cut exactly where
  // b/(a zeta^2) <= -1, i.e. on the slit.
  const complex ratio = p.b() / (p.a() * zeta * zeta);
  return p.sqrt_a() * zeta * std::sqrt(1.0 + ratio);
}

HarmonicPair uv(complex zeta, const Params& p, double lambda) {
  const complex f = sqrt_branch(zeta, p) + lambda * zeta;
  return {f.real(), f.imag()};
}

double rho(complex zeta, const Params& p) {
  const complex w = sqrt_branch(zeta, p);
  return p.b() / std::norm(w + p.sqrt_a() * zeta);
}

double v_via_rho(complex zeta, const Params& p, double lambda) {
  const double r = rho(zeta, p);
  return (p.sqrt_a() * (1.0 - r) / (1.0 + r) + lambda) * zeta.imag();
}

complex exponent_derivative(complex zeta, const Params& p, double lambda) {
  return p.a() * zeta / sqrt_branch(zeta, p) + lambda;
}

EllipseContour ellipse_for(double lambda, const Params& p) {
  if (p.b() == 0.0) {
    throw NumericError(ErrorKind::degenerate_slit, "level-set ellipse needs b > 0");
  }
  const double sa = p.sqrt_a();
  if (!(lambda > -sa && lambda < 0.0)) {
    throw NumericError(ErrorKind::spectral_range, "ellipse requires -sqrt(a) < lambda < 0");
  }
  const double h = p.slit_half_height();
  const double stretch = 1.0 / std::sqrt(1.0 - lambda * lambda / p.a());
  EllipseContour c;
  c.lambda = lambda;
  c.A = h * (std::abs(lambda) / sa) * stretch;
  c.B = h * stretch;
  c.zeta_plus = c.A;
  c.zeta_minus = -c.A;
  return c;
}

complex ellipse_point(const EllipseContour& c, double theta) {
  return {c.A * std::cos(theta), c.B * std::sin(theta)};
}

double verify_level_set(const EllipseContour& c, const Params& p, int n_samples) {
  if (n_samples < 1) throw NumericError(ErrorKind::domain, "need at least one sample");
  constexpr double kSkip = 1e-3;
  double worst = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_samples;
    const double to_axis = std::min({theta, std::abs(theta - std::numbers::pi),
                                     2.0 * std::numbers::pi - theta});
    if (to_axis < kSkip) continue;
    worst = std::max(worst, std::abs(uv(ellipse_point(c, theta), p, c.lambda).v));
  }
  return worst;
}

double normal_derivative_v(const EllipseContour& c, const Params& p, double theta) {
  // For F = u + i v holomorphic, grad v = (Im F', Re F').
  const complex d = exponent_derivative(ellipse_point(c, theta), p, c.lambda);
  double nx = std::cos(theta) / c.A;
  double ny = std::sin(theta) / c.B;
  const double len = std::hypot(nx, ny);
  nx /= len;
  ny /= len;
  return d.imag() * nx + d.real() * ny;
}

}  // namespace ecx::branch
