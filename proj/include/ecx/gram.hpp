#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecx::gram {

using RealFunction = std::function<double(double)>;

enum class Verdict { psd, not_psd };

std::string_view to_string(Verdict v);

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kMaxPoints = 64;

/// Certificate for one point set: F[r][s] = f(t_r + t_s), row-major.
struct GramReport {
  std::vector<double> points;
  std::vector<double> matrix;
  double min_eigenvalue = 0.0;
  double scale = 0.0;
  Verdict verdict = Verdict::not_psd;
  double tolerance = kDefaultTolerance;

  std::size_t size() const { return points.size(); }
  double at(std::size_t r, std::size_t s) const { return matrix[r * size() + s]; }
};

/// Fills points and matrix; f is evaluated once per unordered pair.
/// The eigenvalue fields are left for psd_verdict.
GramReport gram_matrix(const RealFunction& f, std::span<const double> points);

/// Eigenvalues of a symmetric n x n row-major matrix by cyclic Jacobi
/// rotations, ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

/// Computes min_eigenvalue and scale = max |F| and sets the verdict:
/// psd iff min_eigenvalue >= -tolerance * scale.
GramReport psd_verdict(GramReport report, double tolerance = kDefaultTolerance);

struct ConvexityCheck {
  bool pass = true;
  double worst_normalized_min_eigenvalue = 0.0;
  std::size_t trials = 0;
  GramReport worst;
};

/// Seeded random point sets in [-t_range, t_range]. Trial i uses
/// 2 + (i mod (n_max - 1)) points (a single point when n_max = 1).
ConvexityCheck check_exp_convex(const RealFunction& f, std::size_t trials, std::size_t n_max,
                                double t_range, std::uint64_t seed,
                                double tolerance = kDefaultTolerance);

/// sqrt(f(2 t1) f(2 t2)) - f(t1 + t2); nonnegative for exponentially convex f.
double two_point_inequality(const RealFunction& f, double t1, double t2);

struct ClosureCase {
  std::string name;
  ConvexityCheck check;
};

/// Scaling, sum, product and pointwise-limit closure of the class, built from
/// cosh(1.3 t) and exp(0.7 t).
std::vector<ClosureCase> closure_property_suite(std::uint64_t seed, std::size_t trials = 100);

}  // namespace ecx::gram
