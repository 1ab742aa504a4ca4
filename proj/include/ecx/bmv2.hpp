#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>

#include "ecx/gram.hpp"
#include "ecx/rng.hpp"

namespace ecx::bmv2 {

/// [[h11, h12], [conj(h12), h22]]
struct Hermitian2 {
  double h11 = 0.0;
  double h22 = 0.0;
  std::complex<double> h12 = 0.0;
};

/// Real eigenvalues, ascending.
std::pair<double, double> eigenvalues(const Hermitian2& h);

/// trace exp(tA + B) = 2 exp(tr(M)/2) cosh(sqrt(q)), q = ((m11 - m22)/2)^2 + |m12|^2.
double trace_exp(double t, const Hermitian2& A, const Hermitian2& B);

/// trace exp(tA + B) = 2 exp(mu t + nu) cosh(sqrt(a (t + shift)^2 + b)).
///
/// Writing the eigenvalue-gap quadratic as q(t) = |t u + v|^2 with
/// u = ((A11 - A22)/2, Re A12, Im A12) and v likewise for B gives
/// a = |u|^2, shift = (u.v)/a and b = |u x v|^2 / a >= 0. For a scalar A
/// (a = 0) shift is 0 and b = |v|^2.
struct PhiReduction {
  double a = 0.0;
  double b = 0.0;
  double shift = 0.0;
  double mu = 0.0;
  double nu = 0.0;
};

PhiReduction reduce_to_phi(const Hermitian2& A, const Hermitian2& B);

/// 2 exp(mu t + nu) phi(t + shift, a, b).
double reduced_trace(const PhiReduction& r, double t);

/// max over the grid of |trace_exp - reduced_trace| / (1 + trace_exp).
double verify_reduction(const Hermitian2& A, const Hermitian2& B, std::span<const double> t_grid);

/// Exponential convexity check of t -> trace exp(tA + B).
gram::ConvexityCheck bmv_convexity_check(const Hermitian2& A, const Hermitian2& B,
                                         std::uint64_t seed, std::size_t trials = 200);

/// Entries h11, h22, Re h12, Im h12 drawn uniformly from [lo, hi] in that order.
Hermitian2 random_hermitian(Lcg64& rng, double lo = -2.0, double hi = 2.0);

}  // namespace ecx::bmv2
