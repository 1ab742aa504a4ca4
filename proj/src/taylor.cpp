#include "ecx/taylor.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "ecx/error.hpp"
#include "ecx/quadrature.hpp"
#include "ecx/specfun.hpp"

namespace ecx::taylor {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_recursion_args(int k, int M) {
  if (k < 0) throw NumericError(ErrorKind::domain, "recursion order must be >= 0");
  if (k > kMaxRecursionOrder) {
    throw NumericError(ErrorKind::depth_guard, "recursion order above 8");
  }
  if (M < kMinTruncationDepth) {
    throw NumericError(ErrorKind::truncation_too_shallow, "truncation depth must be >= 20");
  }
}

// psi_l(t, eta / 2^level), memoized per invocation.
class PsiTable {
 public:
  PsiTable(double t, double eta, int M) : t_(t), eta_(eta), M_(M) {}

  double operator()(int l, int level) {
    const auto key = std::make_pair(l, level);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const double value = compute(l, level);
    memo_.emplace(key, value);
    return value;
  }

 private:
  double eta_at(int level) const { return std::ldexp(eta_, -level); }

  double compute(int l, int level) {
    const double eta = eta_at(level);
    if (l == 0) return std::cosh(eta * t_);
    const int k = l - 1;
    const double tail = specfun::sinhc(std::ldexp(eta * t_, -M_)).real();
    // conv[r] = sum over (l_m, ..., l_M) with total r of prod psi_{l_j}/l_j!,
    // built from position M back to position 1.
    std::vector<double> conv(k + 1, 0.0);
    conv[0] = tail;
    for (int m = M_; m >= 1; --m) {
      std::vector<double> next(k + 1, 0.0);
      for (int r = 0; r <= k; ++r) {
        double acc = 0.0;
        for (int j = 0; j <= r; ++j) {
          acc += (*this)(j, level + m) / factorial(j) * conv[r - j];
        }
        next[r] = acc;
      }
      conv = std::move(next);
    }
    return 0.5 * eta * eta * factorial(k) * conv[k];
  }

  double t_;
  double eta_;
  int M_;
  std::map<std::pair<int, int>, double> memo_;
};

void enumerate_into(int remaining, int position, int M, std::vector<std::pair<int, int>>& current,
                    int k, std::vector<CompositionSequence>& out) {
  if (remaining == 0) {
    out.push_back(CompositionSequence{current, k});
    return;
  }
  if (position > M) return;
  for (int l = remaining; l >= 0; --l) {
    if (l > 0) current.emplace_back(position, l);
    enumerate_into(remaining - l, position + 1, M, current, k, out);
    if (l > 0) current.pop_back();
  }
}

}  // namespace

double phi_k_integral(int k, double t, double a, std::size_t n) {
  if (k < 0) throw NumericError(ErrorKind::domain, "coefficient index must be >= 0");
  if (!(a > 0.0)) throw NumericError(ErrorKind::parameter_range, "a must be > 0");
  const double sa = std::sqrt(a);
  if (k == 0) return std::cosh(sa * t);
  if (n < 16) throw NumericError(ErrorKind::invalid_order, "coefficient integral needs n >= 16");
  const double integral = quadrature::integrate(
      [&](double l) { return std::pow(a - l * l, k - 1) * std::exp(l * t); }, -sa, sa, n);
  const double norm = factorial(k - 1) * std::pow(4.0, k) * std::pow(a, k - 0.5);
  return integral / norm;
}

double phi_k_bessel(int k, double t, double a) {
  if (k < 1) throw NumericError(ErrorKind::domain, "Bessel route needs k >= 1");
  if (!(a > 0.0)) throw NumericError(ErrorKind::parameter_range, "a must be > 0");
  if (t == 0.0) throw NumericError(ErrorKind::use_integral_route, "t = 0 is served by phi_k_integral");
  const double at = std::abs(t);
  const double nu = k - 0.5;
  return std::sqrt(std::numbers::pi) * std::pow(2.0, -(k + 0.5)) * std::pow(a, 0.25 - 0.5 * k) *
         std::pow(at, -nu) * specfun::bessel_i_half(k, std::sqrt(a) * at);
}

std::vector<CompositionSequence> enumerate_compositions(int k, int M) {
  if (k < 0 || M < 1) throw NumericError(ErrorKind::domain, "need k >= 0 and M >= 1");
  std::vector<CompositionSequence> out;
  std::vector<std::pair<int, int>> current;
  enumerate_into(k, 1, M, current, k, out);
  return out;
}

double psi_k_recursion(int k, double t, double eta, int M) {
  check_recursion_args(k, M);
  PsiTable table(t, eta, M);
  return table(k, 0);
}

double psi_k_enumerated(int k, double t, double eta, int M) {
  check_recursion_args(k, M);
  if (k == 0) return std::cosh(eta * t);
  PsiTable table(t, eta, M);
  const double tail = specfun::sinhc(std::ldexp(eta * t, -M)).real();
  double sum = 0.0;
  for (const CompositionSequence& seq : enumerate_compositions(k - 1, M)) {
    double term = factorial(k - 1) * tail;
    std::vector<int> l(M + 1, 0);
    for (auto [m, lm] : seq.entries) l[m] = lm;
    for (int m = 1; m <= M; ++m) term *= table(l[m], m) / factorial(l[m]);
    sum += term;
  }
  return 0.5 * eta * eta * sum;
}

TaylorSum phi_from_taylor(double t, const Params& p, int K) {
  if (K < 1) throw NumericError(ErrorKind::domain, "Taylor sum needs K >= 1");
  TaylorSum result;
  double bk_over_kfact = 1.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) bk_over_kfact *= p.b() / k;
    const double term = k == 0 ? phi_k_integral(0, t, p.a()) : bk_over_kfact * phi_k_integral(k, t, p.a());
    result.value += term;
    result.last_term = std::abs(term);
  }
  return result;
}

double phi_xi_derivative_series(int m, double t, double eta, double xi, int K) {
  if (m < 1 || m > 4) throw NumericError(ErrorKind::depth_guard, "derivative order must be in 1..4");
  if (K < m) throw NumericError(ErrorKind::domain, "need K >= m");
  if (K > kMaxRecursionOrder) throw NumericError(ErrorKind::depth_guard, "K above 8");
  if (xi < 0.0) throw NumericError(ErrorKind::domain, "xi must be >= 0");
  PsiTable table(t, eta, kDefaultTruncationDepth);
  double sum = 0.0;
  double last = 0.0;
  for (int k = m; k <= K; ++k) {
    last = table(k, 0) * std::pow(xi, k - m) / factorial(k - m);
    sum += last;
  }
  if (K > m && std::abs(last) > 1e-8) {
    throw NumericError(ErrorKind::tail_too_large, "last included term exceeds 1e-8");
  }
  return sum;
}

double first_xi_derivative_closed_form(double t, double eta, double xi) {
  const double s = std::sqrt(t * t + xi);
  // (eta/2) sinh(eta s)/s = (eta^2/2) sinhc(eta s)
  return 0.5 * eta * eta * specfun::sinhc(eta * s).real();
}

}  // namespace ecx::taylor
