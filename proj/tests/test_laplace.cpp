#include <doctest.h>

#include <cmath>
#include <vector>

#include "ecx/laplace.hpp"
#include "ecx/specfun.hpp"
#include "support.hpp"

using namespace ecx;

TEST_CASE("measure layout") {
  const auto m = laplace::representing_measure(Params(4.0, 1.0), 9);
  REQUIRE(m.atoms.size() == 2);
  CHECK(m.atoms[0].location == -2.0);
  CHECK(m.atoms[1].location == 2.0);
  CHECK(m.atoms[0].mass == 0.5);
  CHECK(m.density.lambdas.size() == 9);
  CHECK(m.density.method == density::DensityMethod::series);
  CHECK(error_kind([] { laplace::representing_measure(Params(1.0, 1.0), 8); }) == ErrorKind::domain);
}

TEST_CASE("atoms alone reproduce cosh when b = 0") {
  const auto m = laplace::representing_measure(Params(2.0, 0.0), 9);
  for (double t : {-3.0, 0.0, 1.5}) {
    CHECK(laplace::reconstruct_phi(m, t) == doctest::Approx(std::cosh(std::sqrt(2.0) * t)).epsilon(1e-15));
  }
  CHECK(laplace::total_mass(m) == 1.0);
}

TEST_CASE("reconstruction and mass") {
  for (double b : {0.3, 1.0, 10.0}) {
    const Params p(1.0, b);
    const auto m = laplace::representing_measure(p, 9);
    CHECK(laplace::total_mass(m) == doctest::Approx(std::cosh(std::sqrt(b))).epsilon(1e-13));
    for (double t : {-5.0, -0.4, 0.0, 2.0, 5.0}) {
      CHECK(laplace::reconstruct_phi(m, t) == doctest::Approx(std::cosh(std::sqrt(t * t + b))).epsilon(1e-11));
    }
  }
}

TEST_CASE("Fourier identity") {
  const Params p(1.0, 1.0);
  // d(0) = phi(0) - cosh(0) = cosh(1) - 1 = int of the density.
  CHECK(laplace::d_gap({0.0, 0.0}, p).real() == doctest::Approx(std::cosh(1.0) - 1.0).epsilon(1e-15));
  // d(i tau) = cos(sqrt(b - a tau^2)) - cos(sqrt(a) tau); at tau = 1 the first term is 1.
  CHECK(laplace::d_gap({0.0, 1.0}, p).real() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-14));
  for (double tau : {0.0, 1.0, 5.0, 10.0, 50.0}) CHECK(laplace::verify_fourier(p, tau) < 1e-10);
}

TEST_CASE("tail residual") {
  const Params p(1.0, 2.0);
  const std::vector<double> taus{20.0, 200.0, 2000.0};
  const auto r = laplace::verify_tail_asymptotic(p, taus);
  REQUIRE(r.size() == 3);
  for (double v : r) CHECK(v <= 2.0 * 4.0 / 8.0 + 1e-2);
  const std::vector<double> zero{0.0};
  const std::vector<double> small{0.5};
  CHECK(error_kind([&] { laplace::verify_tail_asymptotic(p, zero); }) == ErrorKind::division_by_zero);
  CHECK(error_kind([&] { laplace::verify_tail_asymptotic(p, small); }) == ErrorKind::domain);
}
