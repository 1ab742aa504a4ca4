#include "ecx/io.hpp"

#include <charconv>

namespace ecx::io {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const Params& p) { return {{"a", p.a()}, {"b", p.b()}}; }

nlohmann::json to_json(const density::DensityProfile& profile) {
  return {{"lambdas", profile.lambdas},
          {"values", profile.values},
          {"method", std::string(density::to_string(profile.method))}};
}

nlohmann::json to_json(const laplace::RepresentingMeasure& m) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& atom : m.atoms) atoms.push_back({{"location", atom.location}, {"mass", atom.mass}});
  return {{"atoms", atoms}, {"density", to_json(m.density)}, {"params", to_json(m.density.params)}};
}

nlohmann::json to_json(const gram::GramReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < report.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t s = 0; s < report.size(); ++s) row.push_back(report.at(r, s));
    rows.push_back(std::move(row));
  }
  return {{"points", report.points},
          {"matrix", rows},
          {"min_eigenvalue", report.min_eigenvalue},
          {"scale", report.scale},
          {"verdict", std::string(gram::to_string(report.verdict))},
          {"tolerance", report.tolerance}};
}

nlohmann::json to_json(const bmv2::PhiReduction& r) {
  return {{"a", r.a}, {"b", r.b}, {"shift", r.shift}, {"mu", r.mu}, {"nu", r.nu}};
}

}  // namespace ecx::io
