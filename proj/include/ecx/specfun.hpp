#pragma once

#include <complex>
#include <utility>

#include "ecx/params.hpp"

namespace ecx::specfun {

using complex = std::complex<double>;

/// The entire function z -> cosh(sqrt(z)) = sum z^k / (2k)!.
complex cosh_sqrt(complex z);
double cosh_sqrt(double z);

/// The entire function z -> sinh(sqrt(z)) / sqrt(z) = sum z^k / (2k+1)!.
double sinh_sqrt_ratio(double z);

/// sinh(z)/z, continuous at z = 0.
complex sinhc(complex z);

/// phi(t) = cosh(sqrt(a t^2 + b)).
complex phi(complex t, const Params& p);
double phi(double t, const Params& p);

/// psi(t) = sinh(sqrt(a t^2 + b)) / sqrt(a t^2 + b), with value 1 at a t^2 + b = 0.
double psi_sinc(double t, const Params& p);

inline constexpr double kBesselOverflowArg = 700.0;

/// Modified Bessel function I_1 by its power series, 0 <= x <= 700.
double bessel_i1(double x);

/// I_{k-1/2}(x) for k >= 1, x > 0, by upward recurrence from the closed
/// half-integer forms. Falls back to the power series when the recurrence
/// disagrees with it beyond 1e-10 relative.
double bessel_i_half(int k, double x);

/// I_{k-1/2}(x) summed directly from its power series.
double bessel_i_half_series(int k, double x);

/// (sinh z / z, prod_{m=1}^{M} cosh(z / 2^m)).
std::pair<complex, complex> product_identity_lhs_rhs(complex z, int M = 40);

}  // namespace ecx::specfun
