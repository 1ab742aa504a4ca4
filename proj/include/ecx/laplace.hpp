#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ecx/density.hpp"
#include "ecx/params.hpp"

namespace ecx::laplace {

struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

/// Measure whose two-sided Laplace transform is phi(., a, b): atoms of mass
/// 1/2 at +-sqrt(a) plus the density on (-sqrt(a), sqrt(a)).
///
/// The sampled profile is kept for export only. Everything that integrates
/// against the measure evaluates density_series at quadrature nodes instead.
struct RepresentingMeasure {
  std::vector<Atom> atoms;
  density::DensityProfile density;
};

/// n_lambda >= 9 export samples, series method.
RepresentingMeasure representing_measure(const Params& p, std::size_t n_lambda);

/// Atom masses plus the integral of the density.
double total_mass(const RepresentingMeasure& m, std::size_t n = 128);

/// Sum of atoms mass * exp(location t) plus the Gauss-Legendre integral of
/// d(lambda) exp(lambda t). The order starts at n (>= 16) and doubles until
/// two successive values agree to 1e-10, capped at 1024.
double reconstruct_phi(const RepresentingMeasure& m, double t, std::size_t n = 16);

/// cosh(sqrt(a t^2 + b)) - cosh(sqrt(a) t), evaluated through the entire
/// function cosh(sqrt(.)), so no branch choice is involved.
std::complex<double> d_gap(std::complex<double> t, const Params& p);

/// |d_gap(i tau) - int d(lambda) exp(i lambda tau) dlambda| with an n-point rule.
double verify_fourier(const Params& p, double tau, std::size_t n = 512);

/// tau^2 |d_gap(i tau) - (b/2) sin(sqrt(a) tau) / (sqrt(a) tau)| for every
/// tau in the grid; each |tau| must be >= 1.
std::vector<double> verify_tail_asymptotic(const Params& p, std::span<const double> tau_grid);

}  // namespace ecx::laplace
