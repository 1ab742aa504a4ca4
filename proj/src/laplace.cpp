#include "ecx/laplace.hpp"

#include <cmath>

#include "ecx/error.hpp"
#include "ecx/quadrature.hpp"
#include "ecx/specfun.hpp"

namespace ecx::laplace {
namespace {

constexpr std::size_t kMaxReconstructionOrder = 1024;

double density_moment(const Params& p, double t, std::size_t n) {
  if (p.b() == 0.0) return 0.0;
  const double sa = p.sqrt_a();
  return quadrature::integrate(
      [&](double l) { return density::density_series(l, p) * std::exp(l * t); }, -sa, sa, n);
}

}  // namespace

RepresentingMeasure representing_measure(const Params& p, std::size_t n_lambda) {
  if (n_lambda < 9) throw NumericError(ErrorKind::domain, "measure export needs n_lambda >= 9");
  const double sa = p.sqrt_a();
  return RepresentingMeasure{
      {Atom{-sa, 0.5}, Atom{sa, 0.5}},
      density::density_profile(p, n_lambda, density::DensityMethod::series),
  };
}

double total_mass(const RepresentingMeasure& m, std::size_t n) {
  double mass = 0.0;
  for (const Atom& atom : m.atoms) mass += atom.mass;
  return mass + density_moment(m.density.params, 0.0, n);
}

double reconstruct_phi(const RepresentingMeasure& m, double t, std::size_t n) {
  if (n < 16) throw NumericError(ErrorKind::invalid_order, "reconstruction needs n >= 16");
  double atoms = 0.0;
  for (const Atom& atom : m.atoms) atoms += atom.mass * std::exp(atom.location * t);
  const Params& p = m.density.params;
  double previous = density_moment(p, t, n);
  while (n < kMaxReconstructionOrder) {
    n = std::min(2 * n, kMaxReconstructionOrder);
    const double current = density_moment(p, t, n);
    const bool converged = std::abs(current - previous) < 1e-10;
    previous = current;
    if (converged) break;
  }
  return atoms + previous;
}

std::complex<double> d_gap(std::complex<double> t, const Params& p) {
  return specfun::phi(t, p) - specfun::cosh_sqrt(p.a() * t * t);
}

double verify_fourier(const Params& p, double tau, std::size_t n) {
  const std::complex<double> lhs = d_gap({0.0, tau}, p);
  std::complex<double> rhs = 0.0;
  if (p.b() > 0.0) {
    const double sa = p.sqrt_a();
    rhs = quadrature::integrate(
        [&](double l) {
          return density::density_series(l, p) * std::complex<double>(std::cos(l * tau), std::sin(l * tau));
        },
        -sa, sa, n);
  }
  return std::abs(lhs - rhs);
}

std::vector<double> verify_tail_asymptotic(const Params& p, std::span<const double> tau_grid) {
  std::vector<double> out;
  out.reserve(tau_grid.size());
  const double sa = p.sqrt_a();
  for (double tau : tau_grid) {
    if (tau == 0.0) throw NumericError(ErrorKind::division_by_zero, "tail check at tau = 0");
    if (std::abs(tau) < 1.0) throw NumericError(ErrorKind::domain, "tail check needs |tau| >= 1");
    const double d = d_gap({0.0, tau}, p).real();
    const double lead = 0.5 * p.b() * std::sin(sa * tau) / (sa * tau);
    out.push_back(tau * tau * std::abs(d - lead));
  }
  return out;
}

}  // namespace ecx::laplace
