#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecx {

enum class ErrorKind {
  invalid_order,
  invalid_interval,
  non_finite,
  domain,
  overflow,
  parameter_range,
  spectral_range,
  branch_cut_proximity,
  degenerate_slit,
  depth_guard,
  truncation_too_shallow,
  tail_too_large,
  use_integral_route,
  degenerate_reduction,
  contract_violation,
  division_by_zero,
};

std::string_view to_string(ErrorKind kind);

/// Every numerical failure in the library is reported through this type.
class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ecx
