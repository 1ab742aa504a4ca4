#include "ecx/density.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ecx/error.hpp"
#include "ecx/quadrature.hpp"
#include "ecx/specfun.hpp"

namespace ecx::density {
namespace {

constexpr double kPi = std::numbers::pi;

// a - lambda^2, with the range check. A few ulps past sqrt(a) are accepted
// so that grid endpoints computed in floating point stay admissible.
double spectral_gap(double lambda, const Params& p) {
  if (!std::isfinite(lambda) || std::abs(lambda) > p.sqrt_a() * (1.0 + 1e-14)) {
    throw NumericError(ErrorKind::spectral_range, "|lambda| must not exceed sqrt(a)");
  }
  return std::max(0.0, p.a() - lambda * lambda);
}

constexpr double kExtrapolationStep = 0.025;

double contour_trapezoid(double lambda, const Params& p, std::size_t n) {
  const branch::EllipseContour c = branch::ellipse_for(lambda, p);
  const double rel = std::abs(lambda) / p.sqrt_a();
  const auto needed = static_cast<std::size_t>(std::ceil(48.0 / rel));
  const std::size_t nodes = std::max(n, std::min<std::size_t>(needed, 1u << 16));
  const double h = 2.0 * kPi / static_cast<double>(nodes);
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    const double theta = h * static_cast<double>(j);
    const double u = branch::uv(branch::ellipse_point(c, theta), p, lambda).u;
    sum += std::exp(-u) * c.B * std::cos(theta);
  }
  return -(h * sum) / (4.0 * kPi);
}

}  // namespace

std::string_view to_string(DensityMethod method) {
  switch (method) {
    case DensityMethod::series: return "series";
    case DensityMethod::bessel: return "bessel";
    case DensityMethod::sinh_quadrature: return "sinh_quadrature";
    case DensityMethod::contour_ellipse: return "contour_ellipse";
  }
  return "unknown";
}

std::optional<DensityMethod> parse_method(std::string_view name) {
  if (name == "series") return DensityMethod::series;
  if (name == "bessel") return DensityMethod::bessel;
  if (name == "quad" || name == "sinh_quadrature") return DensityMethod::sinh_quadrature;
  if (name == "contour" || name == "contour_ellipse") return DensityMethod::contour_ellipse;
  return std::nullopt;
}

double density_series(double lambda, const Params& p) {
  const double gap = spectral_gap(lambda, p);
  if (p.b() == 0.0) return 0.0;
  const double x = gap * p.b() / (4.0 * p.a());
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 1000; ++k) {
    term *= x / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return p.b() / (4.0 * p.sqrt_a()) * sum;
}

double density_bessel(double lambda, const Params& p) {
  const double gap = spectral_gap(lambda, p);
  if (p.b() == 0.0) return 0.0;
  if (gap < 1e-8) return density_series(lambda, p);
  const double x = std::sqrt(gap * p.b() / p.a());
  return std::sqrt(p.b()) / (2.0 * std::sqrt(gap)) * specfun::bessel_i1(x);
}

double density_sinh_quadrature(double lambda, const Params& p, std::size_t n) {
  spectral_gap(lambda, p);
  if (n < 8) throw NumericError(ErrorKind::invalid_order, "sinh quadrature needs n >= 8");
  const double rb = std::sqrt(p.b());
  const double h = p.slit_half_height();
  // tau = sin(sigma): sqrt(1 - tau^2) = cos(sigma), dtau = cos(sigma) dsigma
  const double integral = quadrature::integrate(
      [&](double sigma) {
        const double cs = std::cos(sigma);
        return std::sinh(rb * cs) * std::cos(lambda * h * std::sin(sigma)) * cs;
      },
      0.0, 0.5 * kPi, n);
  return h / kPi * integral;
}

double density_contour_ellipse(double lambda, const Params& p, std::size_t n) {
  spectral_gap(lambda, p);
  if (p.b() == 0.0) throw NumericError(ErrorKind::degenerate_slit, "contour method needs b > 0");
  if (n < 8) throw NumericError(ErrorKind::invalid_order, "contour method needs n >= 8");
  const double sa = p.sqrt_a();
  const double neg = -std::abs(lambda);
  if (neg <= -sa) return endpoint_value(p);  // the ellipse escapes to infinity
  if (std::abs(neg) >= kExtrapolationStep * sa) return contour_trapezoid(neg, p, n);

  // Neville extrapolation in x = lambda^2 from four well-conditioned ellipses.
  std::array<double, 4> xs{};
  std::array<double, 4> ys{};
  for (int k = 0; k < 4; ++k) {
    const double l = -kExtrapolationStep * sa * (k + 1);
    xs[k] = l * l;
    ys[k] = contour_trapezoid(l, p, n);
  }
  const double target = neg * neg;
  for (int level = 1; level < 4; ++level) {
    for (int i = 0; i + level < 4; ++i) {
      ys[i] = ((target - xs[i + level]) * ys[i] + (xs[i] - target) * ys[i + 1]) /
              (xs[i] - xs[i + level]);
    }
  }
  return ys[0];
}

double contour_positivity_integrand(const branch::EllipseContour& c, const Params& p,
                                    double theta) {
  const branch::complex z = branch::ellipse_point(c, theta);
  const double u = branch::uv(z, p, c.lambda).u;
  return std::exp(-u) * z.imag() * branch::normal_derivative_v(c, p, theta);
}

double density_contour_arclength(double lambda, const Params& p, std::size_t n) {
  const branch::EllipseContour c = branch::ellipse_for(lambda, p);
  const double integral = quadrature::integrate(
      [&](double theta) {
        const double ds = std::hypot(c.A * std::sin(theta), c.B * std::cos(theta));
        return contour_positivity_integrand(c, p, theta) * ds;
      },
      0.0, kPi, n);
  return integral / (2.0 * kPi);
}

double endpoint_value(const Params& p) { return p.b() / (4.0 * p.sqrt_a()); }

double evaluate(DensityMethod method, double lambda, const Params& p, std::size_t n) {
  switch (method) {
    case DensityMethod::series: return density_series(lambda, p);
    case DensityMethod::bessel: return density_bessel(lambda, p);
    case DensityMethod::sinh_quadrature:
      return density_sinh_quadrature(lambda, p, n == 0 ? kDefaultSinhOrder : n);
    case DensityMethod::contour_ellipse:
      return density_contour_ellipse(lambda, p, n == 0 ? kDefaultContourNodes : n);
  }
  throw NumericError(ErrorKind::contract_violation, "unknown density method");
}

std::vector<double> lambda_grid(const Params& p, std::size_t n_lambda) {
  if (n_lambda < 3) throw NumericError(ErrorKind::domain, "profile needs at least 3 points");
  const double sa = p.sqrt_a();
  std::vector<double> grid(n_lambda, 0.0);
  const double step = 2.0 / static_cast<double>(n_lambda - 1);
  for (std::size_t i = 0; i < n_lambda / 2; ++i) {
    const double l = -sa + sa * step * static_cast<double>(i);
    grid[i] = i == 0 ? -sa : l;
    grid[n_lambda - 1 - i] = -grid[i];
  }
  return grid;
}

DensityProfile density_profile(const Params& p, std::size_t n_lambda, DensityMethod method,
                               std::size_t n) {
  DensityProfile profile{p, lambda_grid(p, n_lambda), {}, method};
  profile.values.reserve(n_lambda);
  for (double l : profile.lambdas) {
    const double v = evaluate(method, l, p, n);
    if (!std::isfinite(v)) {
      throw NumericError(ErrorKind::non_finite, "density profile produced a non-finite value");
    }
    profile.values.push_back(v);
  }
  if (p.b() > 0.0) {
    for (std::size_t i = 1; i + 1 < n_lambda; ++i) {
      if (!(profile.values[i] > 0.0)) {
        throw NumericError(ErrorKind::contract_violation,
                           "density must be positive inside (-sqrt(a), sqrt(a))");
      }
    }
  }
  return profile;
}

}  // namespace ecx::density
