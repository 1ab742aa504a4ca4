#include <doctest.h>

#include <cmath>

#include "ecx/density.hpp"
#include "support.hpp"

using namespace ecx;
using namespace ecx::density;

namespace {

// Closed form through the standard library Bessel function.
double oracle(double l, const Params& p) {
  const double g = p.a() - l * l;
  if (g == 0.0) return p.b() / (4.0 * p.sqrt_a());
  return std::sqrt(p.b()) / (2.0 * std::sqrt(g)) * std::cyl_bessel_i(1.0, std::sqrt(g * p.b() / p.a()));
}

}  // namespace

TEST_CASE("high-precision reference values") {
  // 30-digit values of sqrt(b)/(2 sqrt(a - l^2)) I_1(sqrt((a - l^2) b / a))
  struct Case {
    double a, b, l, d;
  };
  for (const auto& c : {Case{1, 1, 0, 0.2825795519962425136}, Case{4, 10, -1, 2.8510215728027758512},
                        Case{0.5, 0.1, 0.3, 0.035718971575504653822}, Case{1, 10, 0.999, 2.5062520802937289375}}) {
    const Params p(c.a, c.b);
    for (auto m : {DensityMethod::series, DensityMethod::bessel, DensityMethod::sinh_quadrature,
                   DensityMethod::contour_ellipse}) {
      INFO(to_string(m), " a=", c.a, " b=", c.b, " l=", c.l);
      CHECK(evaluate(m, c.l, p) == doctest::Approx(c.d).epsilon(1e-10));
    }
  }
}

TEST_CASE("series against std::cyl_bessel_i across the band") {
  for (double a : {0.25, 1.0, 9.0}) {
    for (double b : {0.01, 2.0, 30.0}) {
      const Params p(a, b);
      for (int i = 0; i <= 20; ++i) {
        const double l = -p.sqrt_a() + i * p.sqrt_a() / 10.0;
        CHECK(density_series(l, p) == doctest::Approx(oracle(l, p)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("endpoint value") {
  const Params p(4.0, 3.0);
  CHECK(endpoint_value(p) == 3.0 / 8.0);
  CHECK(density_series(2.0, p) == 3.0 / 8.0);
  CHECK(density_series(-2.0, p) == 3.0 / 8.0);
  CHECK(density_bessel(2.0, p) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  CHECK(density_contour_ellipse(-2.0, p) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
}

TEST_CASE("even in lambda") {
  const Params p(2.0, 5.0);
  for (double l : {0.1, 0.7, 1.3}) {
    CHECK(density_series(l, p) == density_series(-l, p));
    CHECK(density_contour_ellipse(l, p) == density_contour_ellipse(-l, p));
    CHECK(density_sinh_quadrature(l, p) == doctest::Approx(density_sinh_quadrature(-l, p)).epsilon(1e-14));
  }
}

TEST_CASE("contour near lambda = 0 and the arclength form") {
  const Params p(1.0, 10.0);
  for (double l : {0.0, -1e-4, -0.01, -0.03, -0.2, -0.9}) {
    CHECK(density_contour_ellipse(l, p) == doctest::Approx(oracle(l, p)).epsilon(1e-10));
  }
  for (double l : {-0.05, -0.5, -0.95}) {
    CHECK(density_contour_arclength(l, p) == doctest::Approx(oracle(l, p)).epsilon(1e-10));
  }
  const auto c = branch::ellipse_for(-0.5, p);
  for (int j = 1; j < 32; ++j) CHECK(contour_positivity_integrand(c, p, 3.14159 * j / 32.0) > 0.0);
}

TEST_CASE("b = 0 gives the zero density") {
  const Params p(3.0, 0.0);
  CHECK(density_series(0.5, p) == 0.0);
  CHECK(density_bessel(0.5, p) == 0.0);
  CHECK(density_sinh_quadrature(0.5, p) == 0.0);
  CHECK(error_kind([&] { density_contour_ellipse(-0.5, p); }) == ErrorKind::degenerate_slit);
  const auto profile = density_profile(p, 5, DensityMethod::series);
  for (double v : profile.values) CHECK(v == 0.0);
}

TEST_CASE("grid and profile") {
  const Params p(1.0, 1.0);
  const auto grid = lambda_grid(p, 5);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == -1.0);
  CHECK(grid.back() == 1.0);
  CHECK(grid[2] == 0.0);
  CHECK(grid[1] == -grid[3]);
  const auto profile = density_profile(p, 5, DensityMethod::series);
  CHECK(profile.values.front() == 0.25);
  CHECK(profile.values.back() == 0.25);
  const auto contour = density_profile(Params(4.0, 1.0), 9, DensityMethod::contour_ellipse);
  const auto series = density_profile(Params(4.0, 1.0), 9, DensityMethod::series);
  for (std::size_t i = 0; i < 9; ++i) CHECK(contour.values[i] == doctest::Approx(series.values[i]).epsilon(1e-9));
}

TEST_CASE("method names and errors") {
  CHECK(parse_method("quad") == DensityMethod::sinh_quadrature);
  CHECK(parse_method("contour") == DensityMethod::contour_ellipse);
  CHECK(parse_method("series") == DensityMethod::series);
  CHECK(!parse_method("simpson"));
  const Params p(1.0, 1.0);
  CHECK(error_kind([&] { density_series(1.5, p); }) == ErrorKind::spectral_range);
  CHECK(error_kind([&] { density_sinh_quadrature(0.0, p, 4); }) == ErrorKind::invalid_order);
  CHECK(error_kind([&] { density_profile(p, 2, DensityMethod::series); }) == ErrorKind::domain);
}
