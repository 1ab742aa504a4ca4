#include <doctest.h>

#include "ecx/acceptance.hpp"

using namespace ecx::acceptance;

TEST_CASE("quick battery passes and injected fault is caught") {
  Options o;
  o.quick = true;
  const auto results = run(o);
  REQUIRE(results.size() == 18);
  CHECK(all_pass(results));
  o.fault = Fault::density_sign;
  const auto faulty = run(o);
  CHECK(!faulty[1].pass);
  CHECK(!all_pass(faulty));
  CHECK(format_report(faulty).find("[FAIL] 02") != std::string::npos);
}
