#include "ecx/specfun.hpp"

#include <cmath>
#include <numbers>

#include "ecx/error.hpp"

namespace ecx::specfun {
namespace {

// Power series are used inside this radius; outside it the closed forms
// avoid the cancellation an alternating series would suffer.
constexpr double kSeriesRadius = 4.0;
constexpr double kSeriesStop = 1e-17;
constexpr int kMaxTerms = 2000;

void require_finite(complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NumericError(ErrorKind::non_finite, std::string(who) + ": non-finite input");
  }
}

// sum z^k / (2k + offset)! for offset in {0, 1}
complex even_odd_series(complex z, int offset) {
  complex term = 1.0;
  complex sum = 1.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= z / (static_cast<double>(2 * k - 1 + offset) * static_cast<double>(2 * k + offset));
    sum += term;
    if (std::abs(term) <= kSeriesStop * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

complex cosh_sqrt(complex z) {
  require_finite(z, "cosh_sqrt");
  if (std::abs(z) <= kSeriesRadius) return even_odd_series(z, 0);
  // cosh is even, so either square root gives the same value.
  return std::cosh(std::sqrt(z));
}

double cosh_sqrt(double z) {
  require_finite(z, "cosh_sqrt");
  if (std::abs(z) <= kSeriesRadius) return even_odd_series(z, 0).real();
  return z > 0.0 ? std::cosh(std::sqrt(z)) : std::cos(std::sqrt(-z));
}

double sinh_sqrt_ratio(double z) {
  require_finite(z, "sinh_sqrt_ratio");
  if (std::abs(z) <= kSeriesRadius) return even_odd_series(z, 1).real();
  if (z > 0.0) {
    const double s = std::sqrt(z);
    return std::sinh(s) / s;
  }
  const double s = std::sqrt(-z);
  return std::sin(s) / s;
}

complex sinhc(complex z) {
  if (std::abs(z) <= 1.0) return even_odd_series(z * z, 1);
  return std::sinh(z) / z;
}

complex phi(complex t, const Params& p) { return cosh_sqrt(p.a() * t * t + p.b()); }

double phi(double t, const Params& p) { return cosh_sqrt(p.a() * t * t + p.b()); }

double psi_sinc(double t, const Params& p) { return sinh_sqrt_ratio(p.a() * t * t + p.b()); }

double bessel_i1(double x) {
  if (std::isnan(x) || x < 0.0) throw NumericError(ErrorKind::domain, "bessel_i1 requires x >= 0");
  if (x > kBesselOverflowArg) throw NumericError(ErrorKind::overflow, "bessel_i1 argument above 700");
  if (x == 0.0) return 0.0;
  const double q = 0.25 * x * x;
  double term = 0.5 * x;
  double sum = term;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= q / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
    sum += term;
    if (term <= kSeriesStop * sum) break;
  }
  return sum;
}

double bessel_i_half_series(int k, double x) {
  if (k < 1) throw NumericError(ErrorKind::domain, "bessel_i_half requires k >= 1");
  if (!(x > 0.0)) throw NumericError(ErrorKind::domain, "bessel_i_half requires x > 0");
  if (x > kBesselOverflowArg) throw NumericError(ErrorKind::overflow, "bessel_i_half argument above 700");
  const double nu = k - 0.5;
  const double q = 0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int j = 0; j < kMaxTerms; ++j) {
    term *= q / (static_cast<double>(j + 1) * (j + 1 + nu));
    sum += term;
    if (term <= kSeriesStop * sum) break;
  }
  return sum;
}

double bessel_i_half(int k, double x) {
  if (k < 1) throw NumericError(ErrorKind::domain, "bessel_i_half requires k >= 1");
  if (!(x > 0.0)) throw NumericError(ErrorKind::domain, "bessel_i_half requires x > 0");
  if (x > kBesselOverflowArg) throw NumericError(ErrorKind::overflow, "bessel_i_half argument above 700");
  const double scale = std::sqrt(2.0 / (std::numbers::pi * x));
  double prev = scale * std::cosh(x);  // I_{-1/2}
  double cur = scale * std::sinh(x);   // I_{1/2}
  for (int j = 1; j < k; ++j) {
    const double nu = j - 0.5;
    const double next = prev - (2.0 * nu / x) * cur;
    prev = cur;
    cur = next;
  }
  if (k == 1) return cur;
  // Upward recurrence is unstable once the order exceeds the argument.
  const double series = bessel_i_half_series(k, x);
  if (!(cur > 0.0) || std::abs(cur - series) > 1e-10 * series) return series;
  return cur;
}

std::pair<complex, complex> product_identity_lhs_rhs(complex z, int M) {
  if (M < 1) throw NumericError(ErrorKind::domain, "product identity needs M >= 1");
  complex prod = 1.0;
  double scale = 0.5;
  for (int m = 1; m <= M; ++m) {
    prod *= std::cosh(z * scale);
    scale *= 0.5;
  }
  return {sinhc(z), prod};
}

}  // namespace ecx::specfun
