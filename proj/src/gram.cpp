#include "ecx/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ecx/error.hpp"
#include "ecx/rng.hpp"

namespace ecx::gram {

std::string_view to_string(Verdict v) { return v == Verdict::psd ? "psd" : "not_psd"; }

GramReport gram_matrix(const RealFunction& f, std::span<const double> points) {
  const std::size_t n = points.size();
  if (n < 1 || n > kMaxPoints) {
    throw NumericError(ErrorKind::domain, "Gram matrix needs between 1 and 64 points");
  }
  GramReport report;
  report.points.assign(points.begin(), points.end());
  report.matrix.assign(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::isfinite(points[r])) throw NumericError(ErrorKind::non_finite, "point not finite");
    for (std::size_t s = r; s < n; ++s) {
      const double value = f(points[r] + points[s]);
      if (!std::isfinite(value)) {
        throw NumericError(ErrorKind::non_finite, "f not finite at (" + std::to_string(r) + ", " +
                                                      std::to_string(s) + ")");
      }
      report.matrix[r * n + s] = value;
      report.matrix[s * n + r] = value;
    }
  }
  return report;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> m, std::size_t n) {
  auto at = [&](std::size_t r, std::size_t s) -> double& { return m[r * n + s]; };
  double frob = 0.0;
  for (double x : m) frob += x * x;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off <= std::numeric_limits<double>::min() || off <= 1e-34 * frob) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

GramReport psd_verdict(GramReport report, double tolerance) {
  const std::size_t n = report.size();
  if (report.matrix.size() != n * n) {
    throw NumericError(ErrorKind::contract_violation, "matrix size does not match point count");
  }
  double scale = 0.0;
  for (double x : report.matrix) scale = std::max(scale, std::abs(x));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      if (std::abs(report.at(r, s) - report.at(s, r)) > 1e-14 * scale) {
        throw NumericError(ErrorKind::contract_violation, "Gram matrix is not symmetric");
      }
    }
  }
  report.scale = scale;
  report.tolerance = tolerance;
  report.min_eigenvalue = symmetric_eigenvalues(report.matrix, n).front();
  report.verdict = report.min_eigenvalue >= -tolerance * scale ? Verdict::psd : Verdict::not_psd;
  return report;
}

ConvexityCheck check_exp_convex(const RealFunction& f, std::size_t trials, std::size_t n_max,
                                double t_range, std::uint64_t seed, double tolerance) {
  if (trials < 1) throw NumericError(ErrorKind::domain, "need at least one trial");
  if (n_max < 1 || n_max > kMaxPoints) throw NumericError(ErrorKind::domain, "n_max out of range");
  Lcg64 rng(seed);
  ConvexityCheck result;
  result.trials = trials;
  result.worst_normalized_min_eigenvalue = std::numeric_limits<double>::infinity();
  std::vector<double> points;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = n_max == 1 ? 1 : 2 + i % (n_max - 1);
    points.resize(n);
    for (double& x : points) x = rng.uniform(-t_range, t_range);
    GramReport report = psd_verdict(gram_matrix(f, points), tolerance);
    const double normalized = report.scale > 0.0 ? report.min_eigenvalue / report.scale : 0.0;
    if (report.verdict == Verdict::not_psd) result.pass = false;
    if (normalized < result.worst_normalized_min_eigenvalue) {
      result.worst_normalized_min_eigenvalue = normalized;
      result.worst = std::move(report);
    }
  }
  return result;
}

double two_point_inequality(const RealFunction& f, double t1, double t2) {
  const double f1 = f(2.0 * t1);
  const double f2 = f(2.0 * t2);
  if (f1 < 0.0 || f2 < 0.0) {
    throw NumericError(ErrorKind::domain, "f negative on the diagonal; not exponentially convex");
  }
  return std::sqrt(f1 * f2) - f(t1 + t2);
}

std::vector<ClosureCase> closure_property_suite(std::uint64_t seed, std::size_t trials) {
  const RealFunction f1 = [](double t) { return std::cosh(1.3 * t); };
  const RealFunction f2 = [](double t) { return std::exp(0.7 * t); };
  const RealFunction truncated = [](double t) {
    // sum_{k<=30} (t/2)^(2k) / (2k)!
    const double x = 0.5 * t;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 30; ++k) {
      term *= x * x / ((2.0 * k - 1.0) * (2.0 * k));
      sum += term;
    }
    return sum;
  };
  constexpr std::size_t kNMax = 8;
  constexpr double kRange = 3.0;
  std::vector<ClosureCase> cases;
  auto run = [&](std::string name, const RealFunction& f) {
    cases.push_back({std::move(name), check_exp_convex(f, trials, kNMax, kRange, seed)});
  };
  run("scale c=2.5", [&](double t) { return 2.5 * f1(t); });
  run("scale c=0", [](double) { return 0.0; });
  run("sum", [&](double t) { return f1(t) + f2(t); });
  run("product", [&](double t) { return f1(t) * f2(t); });
  run("pointwise limit n=30", truncated);
  return cases;
}

}  // namespace ecx::gram
