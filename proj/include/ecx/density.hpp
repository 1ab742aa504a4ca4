#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ecx/branch.hpp"
#include "ecx/params.hpp"

namespace ecx::density {

enum class DensityMethod { series, bessel, sinh_quadrature, contour_ellipse };

std::string_view to_string(DensityMethod method);
std::optional<DensityMethod> parse_method(std::string_view name);

/// Samples of the representing density on a uniform grid over [-sqrt(a), sqrt(a)].
struct DensityProfile {
  Params params;
  std::vector<double> lambdas;
  std::vector<double> values;
  DensityMethod method;
};

inline constexpr std::size_t kDefaultSinhOrder = 128;
inline constexpr std::size_t kDefaultContourNodes = 512;

/// b / (4 sqrt(a)) * sum_k ((a - lambda^2) b / (4a))^k / (k! (k+1)!).
/// This is the reference route; the other three are checked against it.
double density_series(double lambda, const Params& p);

/// sqrt(b) / (2 sqrt(a - lambda^2)) * I_1(sqrt((a - lambda^2) b / a)).
/// Within 1e-8 of the endpoints (in a - lambda^2) it defers to the series.
/// Returns 0 for b = 0.
double density_bessel(double lambda, const Params& p);

/// (1/pi) sqrt(b/a) int_0^1 sinh(sqrt(b (1 - tau^2))) cos(lambda sqrt(b/a) tau) dtau,
/// integrated in sigma with tau = sin(sigma) so the integrand is smooth.
double density_sinh_quadrature(double lambda, const Params& p, std::size_t n = kDefaultSinhOrder);

/// -(1/4pi) times the closed integral of exp(-u) dy over the level-set ellipse,
/// by the periodic trapezoid rule. Positive lambda is mapped to -lambda.
///
/// As lambda -> 0 the ellipse collapses onto the slit and the integrand
/// develops a near-singularity at a distance of order |lambda|/sqrt(a) from
/// the real theta axis. The node count is raised to keep the trapezoid rule
/// converged, and for |lambda| < 0.025 sqrt(a) the value is obtained by
/// polynomial extrapolation in lambda^2 from four ellipses at
/// lambda = -0.025 sqrt(a) k, k = 1..4.
double density_contour_ellipse(double lambda, const Params& p,
                               std::size_t n = kDefaultContourNodes);

/// The same density written as a positive integral over the upper half of the
/// ellipse in arclength: (1/2pi) int exp(-u) y dv/dn ds. Requires
/// -sqrt(a) < lambda < 0.
double density_contour_arclength(double lambda, const Params& p, std::size_t n = 256);

/// exp(-u) * y * dv/dn at angle theta on the ellipse.
double contour_positivity_integrand(const branch::EllipseContour& c, const Params& p, double theta);

double endpoint_value(const Params& p);

double evaluate(DensityMethod method, double lambda, const Params& p, std::size_t n = 0);

/// Uniform grid of n_lambda >= 3 points with exact endpoints +-sqrt(a) and
/// exact mirror symmetry.
std::vector<double> lambda_grid(const Params& p, std::size_t n_lambda);

/// Evaluates the chosen method on lambda_grid. n = 0 selects the method's
/// default order.
DensityProfile density_profile(const Params& p, std::size_t n_lambda, DensityMethod method,
                               std::size_t n = 0);

}  // namespace ecx::density
