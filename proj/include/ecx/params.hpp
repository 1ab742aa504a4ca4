#pragma once

#include <cmath>

namespace ecx {

/// Coefficients of the quadratic a t^2 + b under the square root in
/// cosh(sqrt(a t^2 + b)). Requires a > 0 and b >= 0.
class Params {
 public:
  Params(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double sqrt_a() const noexcept { return std::sqrt(a_); }

  /// Half height sqrt(b/a) of the slit on the imaginary axis.
  double slit_half_height() const noexcept { return std::sqrt(b_ / a_); }

 private:
  double a_;
  double b_;
};

}  // namespace ecx
