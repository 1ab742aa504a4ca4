#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "ecx/error.hpp"

namespace ecx::quadrature {

/// n-point rule on [-1, 1]. Nodes ascend and are mirrored exactly about 0.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t order = 0;
};

inline constexpr std::size_t kMaxOrder = 4096;

/// Gauss-Legendre rule of order n, 1 <= n <= 4096. Rules are computed once
/// per order and cached; the returned reference stays valid for the life of
/// the process.
const QuadratureRule& gauss_legendre(std::size_t n);

namespace detail {

inline bool finite_value(double v) { return std::isfinite(v); }
inline bool finite_value(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace detail

/// Affine-mapped Gauss-Legendre approximation of the integral of f over
/// [lo, hi]. f may return double or std::complex<double>.
template <typename F>
auto integrate(F&& f, double lo, double hi, std::size_t n) {
  using R = std::decay_t<decltype(f(0.0))>;
  if (!(lo < hi)) {
    throw NumericError(ErrorKind::invalid_interval, "integrate requires lo < hi");
  }
  const QuadratureRule& rule = gauss_legendre(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  R sum{};
  for (std::size_t i = 0; i < rule.order; ++i) {
    const double x = mid + half * rule.nodes[i];
    const R value = f(x);
    if (!detail::finite_value(value)) {
      throw NumericError(ErrorKind::non_finite,
                         "integrand not finite at node " + std::to_string(i));
    }
    sum += rule.weights[i] * value;
  }
  return half * sum;
}

}  // namespace ecx::quadrature
