#pragma once

#include <optional>

#include "ecx/error.hpp"

// Kind of the NumericError thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<ecx::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const ecx::NumericError& e) {
    return e.kind();
  }
  return std::nullopt;
}
