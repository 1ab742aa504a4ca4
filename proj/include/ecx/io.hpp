#pragma once

#include <string>

#include <json.hpp>

#include "ecx/bmv2.hpp"
#include "ecx/density.hpp"
#include "ecx/gram.hpp"
#include "ecx/laplace.hpp"

namespace ecx::io {

/// 17 significant digits, '.' separator regardless of the global locale.
std::string format_number(double x);

nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const density::DensityProfile& profile);

/// {"atoms": [{"location", "mass"}...], "density": {"lambdas", "values",
/// "method"}, "params": {"a", "b"}}
nlohmann::json to_json(const laplace::RepresentingMeasure& m);

/// {"points", "matrix" (rows), "min_eigenvalue", "scale", "verdict", "tolerance"}
nlohmann::json to_json(const gram::GramReport& report);

nlohmann::json to_json(const bmv2::PhiReduction& r);

}  // namespace ecx::io
