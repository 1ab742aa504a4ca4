#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ecx::acceptance {

enum class Fault {
  none,
  /// Negates the Bessel density route; criterion 2 must catch it.
  density_sign,
};

struct Options {
  bool quick = false;
  std::uint64_t seed = 42;
  Fault fault = Fault::none;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

std::vector<CriterionResult> run(const Options& options);

/// One line per criterion plus a summary line; byte-identical for identical options.
std::string format_report(const std::vector<CriterionResult>& results);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace ecx::acceptance
