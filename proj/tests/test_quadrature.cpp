#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "ecx/quadrature.hpp"
#include "support.hpp"

using namespace ecx;

TEST_CASE("two-point rule has nodes at +-1/sqrt(3)") {
  const auto& rule = quadrature::gauss_legendre(2);
  REQUIRE(rule.order == 2);
  CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("weights sum to 2 and nodes are mirrored") {
  for (std::size_t n : {1u, 5u, 16u, 64u, 257u, 1024u}) {
    const auto& rule = quadrature::gauss_legendre(n);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-13));
    for (std::size_t i = 0; i < n; ++i) CHECK(rule.nodes[i] == -rule.nodes[n - 1 - i]);
  }
}

TEST_CASE("n-point rule is exact for degree 2n-1") {
  for (std::size_t n : {3u, 8u, 20u}) {
    const int deg = static_cast<int>(2 * n - 1);
    // int_0^2 x^deg dx = 2^(deg+1)/(deg+1)
    const double got = quadrature::integrate([&](double x) { return std::pow(x, deg); }, 0.0, 2.0, n);
    const double expected = std::pow(2.0, deg + 1) / (deg + 1);
    CHECK(got == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("smooth integrands") {
  CHECK(quadrature::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 32) ==
        doctest::Approx(2.0).epsilon(1e-15));
  const auto z = quadrature::integrate([](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0,
                                       std::numbers::pi / 2, 32);
  CHECK(z.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(z.imag() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("errors") {
  CHECK(error_kind([] { quadrature::gauss_legendre(0); }) == ErrorKind::invalid_order);
  CHECK(error_kind([] { quadrature::gauss_legendre(quadrature::kMaxOrder + 1); }) == ErrorKind::invalid_order);
  CHECK(error_kind([] { quadrature::integrate([](double x) { return x; }, 1.0, 1.0, 8); }) ==
        ErrorKind::invalid_interval);
  CHECK(error_kind([] { quadrature::integrate([](double x) { return 1.0 / x; }, -1.0, 1.0, 1); }) ==
        ErrorKind::non_finite);
}
