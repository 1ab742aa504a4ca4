#include "ecx/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace ecx::quadrature {
namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = pk;
  }
  const double dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

QuadratureRule build_rule(std::size_t n) {
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  if (n == 1) {
    rule.weights[0] = 2.0;
    return rule;
  }
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Largest roots first; Tricomi-style initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre(n, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) {
    const double dp = legendre(n, 0.0).second;
    rule.nodes[half] = 0.0;
    rule.weights[half] = 2.0 / (dp * dp);
  }
  return rule;
}

struct RuleCache {
  std::shared_mutex mutex;
  std::map<std::size_t, std::unique_ptr<const QuadratureRule>> rules;
};

RuleCache& cache() {
  static RuleCache instance;
  return instance;
}

}  // namespace

const QuadratureRule& gauss_legendre(std::size_t n) {
  if (n == 0 || n > kMaxOrder) {
    throw NumericError(ErrorKind::invalid_order,
                       "Gauss-Legendre order must be in [1, 4096], got " + std::to_string(n));
  }
  RuleCache& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.rules.find(n); it != c.rules.end()) return *it->second;
  }
  auto rule = std::make_unique<const QuadratureRule>(build_rule(n));
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.rules.try_emplace(n, std::move(rule));
  return *it->second;
}

}  // namespace ecx::quadrature
