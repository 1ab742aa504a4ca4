// Full acceptance battery: one line per criterion, then a rerun that must
// reproduce the report byte for byte.
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "ecx/acceptance.hpp"

int main(int argc, char** argv) {
  ecx::acceptance::Options options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  const auto results = ecx::acceptance::run(options);
  const std::string report = ecx::acceptance::format_report(results);
  std::cout << report;
  const bool repeatable = ecx::acceptance::format_report(ecx::acceptance::run(options)) == report;
  std::cout << (repeatable ? "[PASS]" : "[FAIL]") << " rerun byte-identical\n";
  return ecx::acceptance::all_pass(results) && repeatable ? EXIT_SUCCESS : EXIT_FAILURE;
}
