#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "ecx/bmv2.hpp"
#include "ecx/rng.hpp"
#include "support.hpp"

using namespace ecx;
using namespace ecx::bmv2;
using complex = std::complex<double>;
using Mat = std::array<complex, 4>;

namespace {

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

// trace exp(M) by scaling, Taylor series and squaring.
double trace_expm(Mat m) {
  const int squarings = 12;
  for (auto& v : m) v /= std::pow(2.0, squarings);
  Mat sum{1.0, 0.0, 0.0, 1.0};
  Mat term = sum;
  for (int k = 1; k <= 20; ++k) {
    term = mul(term, m);
    for (auto& v : term) v /= static_cast<double>(k);
    for (int i = 0; i < 4; ++i) sum[i] += term[i];
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return (sum[0] + sum[3]).real();
}

Mat combine(double t, const Hermitian2& A, const Hermitian2& B) {
  return {t * A.h11 + B.h11, t * A.h12 + B.h12, std::conj(t * A.h12 + B.h12), t * A.h22 + B.h22};
}

}  // namespace

TEST_CASE("eigenvalues") {
  const auto [lo, hi] = eigenvalues({1.0, -1.0, {0.0, 1.0}});
  CHECK(lo == doctest::Approx(-std::sqrt(2.0)));
  CHECK(hi == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("trace exp against a series matrix exponential") {
  Lcg64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto A = random_hermitian(rng);
    const auto B = random_hermitian(rng);
    for (double t : {-1.5, 0.0, 0.7, 2.0}) {
      CHECK(trace_exp(t, A, B) == doctest::Approx(trace_expm(combine(t, A, B))).epsilon(1e-11));
    }
  }
}

TEST_CASE("diag(1,-1) with off-diagonal 1 reduces to phi(t, 1, 1)") {
  const Hermitian2 A{1.0, -1.0, 0.0};
  const Hermitian2 B{0.0, 0.0, 1.0};
  const auto r = reduce_to_phi(A, B);
  CHECK(r.a == doctest::Approx(1.0));
  CHECK(r.b == doctest::Approx(1.0));
  CHECK(r.shift == doctest::Approx(0.0));
  CHECK(r.mu == doctest::Approx(0.0));
  CHECK(r.nu == doctest::Approx(0.0));
  CHECK(reduced_trace(r, 0.5) == doctest::Approx(2.0 * std::cosh(std::sqrt(1.25))).epsilon(1e-15));
}

TEST_CASE("commuting pair gives b = 0, scalar A gives a = 0") {
  const auto r = reduce_to_phi({2.0, 0.0, 0.0}, {1.0, 3.0, 0.0});
  CHECK(r.b == doctest::Approx(0.0).epsilon(1e-15));
  const auto s = reduce_to_phi({1.5, 1.5, 0.0}, {1.0, 3.0, {0.5, 0.5}});
  CHECK(s.a == 0.0);
  CHECK(s.mu == doctest::Approx(1.5));
  const std::vector<double> grid{-1.0, 0.0, 2.0};
  CHECK(verify_reduction({1.5, 1.5, 0.0}, {1.0, 3.0, {0.5, 0.5}}, grid) < 1e-14);
}

TEST_CASE("random pairs") {
  Lcg64 rng(11);
  const std::vector<double> grid{-3.0, -1.0, 0.0, 0.5, 3.0};
  for (int i = 0; i < 10; ++i) {
    const auto A = random_hermitian(rng);
    const auto B = random_hermitian(rng);
    CHECK(reduce_to_phi(A, B).b >= 0.0);
    CHECK(verify_reduction(A, B, grid) < 1e-12);
    CHECK(bmv_convexity_check(A, B, 3 + i, 20).pass);
  }
}
