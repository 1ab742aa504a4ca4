#include "ecx/bmv2.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ecx/error.hpp"
#include "ecx/specfun.hpp"

namespace ecx::bmv2 {
namespace {

constexpr double kScalarThreshold = 1e-14;

std::array<double, 3> gap_vector(const Hermitian2& h) {
  return {0.5 * (h.h11 - h.h22), h.h12.real(), h.h12.imag()};
}

double dot(const std::array<double, 3>& x, const std::array<double, 3>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

std::array<double, 3> cross(const std::array<double, 3>& x, const std::array<double, 3>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

}  // namespace

std::pair<double, double> eigenvalues(const Hermitian2& h) {
  const double mid = 0.5 * (h.h11 + h.h22);
  const auto g = gap_vector(h);
  const double radius = std::sqrt(dot(g, g));
  return {mid - radius, mid + radius};
}

double trace_exp(double t, const Hermitian2& A, const Hermitian2& B) {
  const double half_trace = 0.5 * (t * (A.h11 + A.h22) + (B.h11 + B.h22));
  const double half_gap = 0.5 * (t * (A.h11 - A.h22) + (B.h11 - B.h22));
  const double q = half_gap * half_gap + std::norm(t * A.h12 + B.h12);
  return 2.0 * std::exp(half_trace) * specfun::cosh_sqrt(q);
}

PhiReduction reduce_to_phi(const Hermitian2& A, const Hermitian2& B) {
  const auto u = gap_vector(A);
  const auto v = gap_vector(B);
  PhiReduction r;
  r.mu = 0.5 * (A.h11 + A.h22);
  r.nu = 0.5 * (B.h11 + B.h22);
  r.a = dot(u, u);
  const double c = dot(u, v);
  if (r.a < kScalarThreshold) {
    if (std::abs(c) > 1e-10) {
      throw NumericError(ErrorKind::degenerate_reduction,
                         "A is numerically scalar but the linear coefficient is not zero");
    }
    r.a = 0.0;
    r.b = dot(v, v);
    return r;
  }
  const auto w = cross(u, v);
  r.shift = c / r.a;
  r.b = dot(w, w) / r.a;
  return r;
}

double reduced_trace(const PhiReduction& r, double t) {
  const double s = t + r.shift;
  return 2.0 * std::exp(r.mu * t + r.nu) * specfun::cosh_sqrt(r.a * s * s + r.b);
}

double verify_reduction(const Hermitian2& A, const Hermitian2& B, std::span<const double> t_grid) {
  const PhiReduction r = reduce_to_phi(A, B);
  double worst = 0.0;
  for (double t : t_grid) {
    const double direct = trace_exp(t, A, B);
    worst = std::max(worst, std::abs(direct - reduced_trace(r, t)) / (1.0 + direct));
  }
  return worst;
}

gram::ConvexityCheck bmv_convexity_check(const Hermitian2& A, const Hermitian2& B,
                                         std::uint64_t seed, std::size_t trials) {
  return gram::check_exp_convex([&](double t) { return trace_exp(t, A, B); }, trials, 8, 3.0, seed);
}

Hermitian2 random_hermitian(Lcg64& rng, double lo, double hi) {
  Hermitian2 h;
  h.h11 = rng.uniform(lo, hi);
  h.h22 = rng.uniform(lo, hi);
  const double re = rng.uniform(lo, hi);
  const double im = rng.uniform(lo, hi);
  h.h12 = {re, im};
  return h;
}

}  // namespace ecx::bmv2
