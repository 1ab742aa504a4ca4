#include <doctest.h>

#include <cmath>
#include <vector>

#include "ecx/gram.hpp"
#include "ecx/specfun.hpp"
#include "support.hpp"

using namespace ecx;
using namespace ecx::gram;

TEST_CASE("Jacobi eigenvalues of known matrices") {
  // [[2,1],[1,2]] -> 1, 3
  auto e = symmetric_eigenvalues({2, 1, 1, 2}, 2);
  CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e[1] == doctest::Approx(3.0).epsilon(1e-15));
  // tridiag(-1, 2, -1) of size n: 2 - 2 cos(k pi / (n + 1))
  const std::size_t n = 7;
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = 2.0;
    if (i + 1 < n) m[i * n + i + 1] = m[(i + 1) * n + i] = -1.0;
  }
  e = symmetric_eigenvalues(m, n);
  for (std::size_t k = 1; k <= n; ++k) {
    CHECK(e[k - 1] == doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-13));
  }
}

TEST_CASE("cosh Gram on {0, 1} has determinant sinh(1)^2") {
  const std::vector<double> pts{0.0, 1.0};
  const auto r = psd_verdict(gram_matrix([](double t) { return std::cosh(t); }, pts));
  CHECK(r.at(0, 1) == doctest::Approx(std::cosh(1.0)));
  const auto e = symmetric_eigenvalues(r.matrix, 2);
  CHECK(e[0] * e[1] == doctest::Approx(std::sinh(1.0) * std::sinh(1.0)).epsilon(1e-13));
  CHECK(r.verdict == Verdict::psd);
}

TEST_CASE("cosine is rejected") {
  // det [[1, cos .5], [cos .5, cos 1]] = cos 1 - cos^2 .5 < 0
  const std::vector<double> pts{0.0, 0.25};
  const auto r = psd_verdict(gram_matrix([](double t) { return std::cos(t); }, pts));
  CHECK(r.verdict == Verdict::not_psd);
  CHECK(r.min_eigenvalue < 0.0);
}

TEST_CASE("single point and input checks") {
  const std::vector<double> one{0.7};
  const Params p(1.0, 1.0);
  const auto r = psd_verdict(gram_matrix([&](double t) { return specfun::phi(t, p); }, one));
  CHECK(r.verdict == Verdict::psd);
  CHECK(r.min_eigenvalue == doctest::Approx(std::cosh(std::sqrt(1.0 * 1.96 + 1.0))));
  const std::vector<double> none;
  CHECK(error_kind([&] { gram_matrix([](double) { return 1.0; }, none); }) == ErrorKind::domain);
  const std::vector<double> two{0.0, 1.0};
  CHECK(error_kind([&] { gram_matrix([](double t) { return 1.0 / (t - 1.0); }, two); }) == ErrorKind::non_finite);
  auto bad = gram_matrix([](double) { return 1.0; }, two);
  bad.matrix[1] = 2.0;
  CHECK(error_kind([&] { psd_verdict(bad); }) == ErrorKind::contract_violation);
}

TEST_CASE("seeded convexity checks") {
  const Params p(1.0, 1.0);
  const auto good = check_exp_convex([&](double t) { return specfun::phi(t, p); }, 50, 8, 3.0, 7);
  CHECK(good.pass);
  CHECK(good.trials == 50);
  const auto again = check_exp_convex([&](double t) { return specfun::phi(t, p); }, 50, 8, 3.0, 7);
  CHECK(good.worst_normalized_min_eigenvalue == again.worst_normalized_min_eigenvalue);
  const auto bad = check_exp_convex([](double t) { return std::cos(2.0 * t); }, 50, 8, 3.0, 7);
  CHECK(!bad.pass);
  // 1 / cosh is positive definite but not exponentially convex.
  const auto sech = check_exp_convex([](double t) { return 1.0 / std::cosh(t); }, 50, 8, 3.0, 7);
  CHECK(!sech.pass);
}

TEST_CASE("two-point inequality") {
  CHECK(two_point_inequality([](double t) { return std::exp(0.3 * t); }, 0.4, -1.1) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(two_point_inequality([](double t) { return std::cosh(t); }, 0.4, -1.1) > 0.0);
  CHECK(two_point_inequality([](double t) { return std::cos(t); }, 0.0, 0.5) < 0.0);
}

TEST_CASE("closure suite") {
  const auto cases = closure_property_suite(42, 20);
  CHECK(cases.size() == 5);
  for (const auto& c : cases) {
    INFO(c.name);
    CHECK(c.check.pass);
  }
}
