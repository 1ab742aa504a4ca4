#include <doctest.h>

#include "ecx/io.hpp"
#include "ecx/rng.hpp"

using namespace ecx;

TEST_CASE("17 significant digits") {
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(0.25) == "0.25");
  CHECK(io::format_number(-2.0) == "-2");
  CHECK(io::format_number(1e-20) == "9.9999999999999995e-21");
}

TEST_CASE("measure document") {
  const auto doc = io::to_json(laplace::representing_measure(Params(1.0, 0.0), 9));
  REQUIRE(doc["atoms"].size() == 2);
  CHECK(doc["atoms"][0]["mass"] == 0.5);
  CHECK(doc["atoms"][1]["location"] == 1.0);
  CHECK(doc["density"]["method"] == "series");
  CHECK(doc["density"]["values"].size() == 9);
  for (const auto& v : doc["density"]["values"]) CHECK(v == 0.0);
  CHECK(doc["params"]["b"] == 0.0);
}

TEST_CASE("Gram document") {
  const std::vector<double> pts{0.0, 1.0};
  const auto doc = io::to_json(gram::psd_verdict(gram::gram_matrix([](double t) { return std::exp(t); }, pts)));
  for (const char* key : {"points", "matrix", "min_eigenvalue", "scale", "verdict", "tolerance"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["matrix"][1][1] == doctest::Approx(std::exp(2.0)));
  CHECK(doc["verdict"] == "psd");
}

TEST_CASE("LCG stream") {
  // x <- x * 6364136223846793005 + 1442695040888963407 mod 2^64, output (x >> 11) 2^-53
  Lcg64 rng(42);
  CHECK(rng.next_u64() == 10481999410520546993ULL);
  CHECK(rng.uniform01() == 0.2254634289477513);
  CHECK(rng.uniform(-1.0, 1.0) == doctest::Approx(2.0 * 0.41283831882951183 - 1.0).epsilon(1e-15));
}
