#include "ecx/error.hpp"
#include "ecx/params.hpp"

#include <cmath>

namespace ecx {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid order";
    case ErrorKind::invalid_interval: return "invalid interval";
    case ErrorKind::non_finite: return "non-finite value";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::parameter_range: return "parameter out of range";
    case ErrorKind::spectral_range: return "spectral parameter out of range";
    case ErrorKind::branch_cut_proximity: return "too close to branch cut";
    case ErrorKind::degenerate_slit: return "degenerate slit";
    case ErrorKind::depth_guard: return "recursion depth guard";
    case ErrorKind::truncation_too_shallow: return "truncation too shallow";
    case ErrorKind::tail_too_large: return "series tail too large";
    case ErrorKind::use_integral_route: return "use integral route";
    case ErrorKind::degenerate_reduction: return "degenerate reduction";
    case ErrorKind::contract_violation: return "contract violation";
    case ErrorKind::division_by_zero: return "division by zero";
  }
  return "unknown error";
}

Params::Params(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw NumericError(ErrorKind::non_finite, "parameters must be finite");
  }
  if (!(a > 0.0)) throw NumericError(ErrorKind::parameter_range, "a must be > 0");
  if (!(b >= 0.0)) throw NumericError(ErrorKind::parameter_range, "b must be >= 0");
}

}  // namespace ecx
