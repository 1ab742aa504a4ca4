#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ecx/params.hpp"

namespace ecx::taylor {

/// phi_k(t, a): k-th Taylor coefficient of cosh(sqrt(a t^2 + b)) in b, so that
/// phi = sum_k phi_k b^k / k!. phi_0 = cosh(sqrt(a) t); for k >= 1 the
/// coefficient is the Gauss-Legendre integral
///   1 / ((k-1)! 4^k a^(k-1/2)) int_{-sqrt a}^{sqrt a} (a - l^2)^(k-1) e^(l t) dl.
double phi_k_integral(int k, double t, double a, std::size_t n = 64);

/// The same coefficient through the half-integer Bessel function:
///   sqrt(pi) 2^-(k+1/2) a^(1/4 - k/2) |t|^-(k-1/2) I_{k-1/2}(sqrt(a) |t|).
/// k >= 1; t = 0 is rejected (use phi_k_integral).
double phi_k_bessel(int k, double t, double a);

inline constexpr int kMaxRecursionOrder = 8;
inline constexpr int kMinTruncationDepth = 20;
inline constexpr int kDefaultTruncationDepth = 30;

/// Nonzero entries (m, l_m) of a sequence l = (l_1, l_2, ...) with |l| = k.
struct CompositionSequence {
  std::vector<std::pair<int, int>> entries;
  int k = 0;
};

/// All sequences with |l| = k supported on positions 1..M, in lexicographic
/// order of (l_1, ..., l_M) descending.
std::vector<CompositionSequence> enumerate_compositions(int k, int M);

/// psi_k(t, eta) = d^k/dxi^k cosh(eta sqrt(t^2 + xi)) at xi = 0, from
///   psi_0(t, eta) = cosh(eta t),
///   psi_{k+1}(t, eta) = (eta^2/2) sum_{|l|=k} k!/prod(l_m!) prod_m psi_{l_m}(t, eta/2^m).
/// Positions m > M are all zero and close to sinh(x)/x with x = eta t 2^-M.
/// k <= 8, M >= 20.
double psi_k_recursion(int k, double t, double eta, int M = kDefaultTruncationDepth);

/// Reference evaluation of the same recursion that sums every composition
/// explicitly instead of using the memoized convolution. Only practical for
/// small k.
double psi_k_enumerated(int k, double t, double eta, int M = kMinTruncationDepth);

struct TaylorSum {
  double value = 0.0;
  double last_term = 0.0;
};

/// Partial sum of phi_k(t, a) b^k / k! for k = 0..K.
TaylorSum phi_from_taylor(double t, const Params& p, int K);

/// d^m/dxi^m cosh(eta sqrt(t^2 + xi)) = sum_{k=m}^{K} psi_k(t, eta) xi^(k-m) / (k-m)!.
/// m <= 4 and K <= 8; throws when the k = K term exceeds 1e-8.
double phi_xi_derivative_series(int m, double t, double eta, double xi, int K = kMaxRecursionOrder);

/// (eta/2) sinh(eta sqrt(t^2 + xi)) / sqrt(t^2 + xi).
double first_xi_derivative_closed_form(double t, double eta, double xi);

}  // namespace ecx::taylor
