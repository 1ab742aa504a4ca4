#include "ecx/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "ecx/bmv2.hpp"
#include "ecx/branch.hpp"
#include "ecx/density.hpp"
#include "ecx/error.hpp"
#include "ecx/gram.hpp"
#include "ecx/laplace.hpp"
#include "ecx/rng.hpp"
#include "ecx/specfun.hpp"
#include "ecx/taylor.hpp"

namespace ecx::acceptance {
namespace {

using complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

std::string fmt(const char* pattern, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

CriterionResult start(int id, const char* name) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  return r;
}

using DensityFn = std::function<double(double, const Params&)>;

struct Context {
  Options options;
  std::vector<Params> ab_positive;   // {0.5, 1, 4} x {0.1, 1, 10}
  std::vector<Params> ab_with_zero;  // {0.5, 1, 4} x {0, 0.1, 1, 10}
  std::vector<Params> ab_convex;     // {0.5, 1, 4} x {0, 1, 10}
  std::array<std::pair<const char*, DensityFn>, 4> methods;
  std::size_t gram_trials;
  std::size_t pair_count;
  std::size_t bmv_pairs;

  explicit Context(const Options& o) : options(o) {
    const std::vector<double> as = o.quick ? std::vector<double>{1.0, 4.0} : std::vector<double>{0.5, 1.0, 4.0};
    for (double a : as) {
      for (double b : {0.1, 1.0, 10.0}) ab_positive.emplace_back(a, b);
      for (double b : {0.0, 0.1, 1.0, 10.0}) ab_with_zero.emplace_back(a, b);
      for (double b : {0.0, 1.0, 10.0}) ab_convex.emplace_back(a, b);
    }
    DensityFn bessel = [](double l, const Params& p) { return density::density_bessel(l, p); };
    if (o.fault == Fault::density_sign) {
      bessel = [](double l, const Params& p) { return -density::density_bessel(l, p); };
    }
    methods = {{
        {"series", [](double l, const Params& p) { return density::density_series(l, p); }},
        {"bessel", bessel},
        {"sinh_quadrature",
         [](double l, const Params& p) { return density::density_sinh_quadrature(l, p, 128); }},
        {"contour_ellipse",
         [](double l, const Params& p) { return density::density_contour_ellipse(l, p, 512); }},
    }};
    gram_trials = o.quick ? 40 : 200;
    pair_count = o.quick ? 200 : 1000;
    bmv_pairs = o.quick ? 10 : 50;
  }

  std::uint64_t seed_for(int id) const { return options.seed * 1000003ULL + static_cast<std::uint64_t>(id); }
};

// 21 interior points -sqrt(a) + i * 2 sqrt(a) / 22, i = 1..21.
std::vector<double> interior_lambdas(const Params& p) {
  std::vector<double> out;
  const double sa = p.sqrt_a();
  for (int i = 1; i <= 21; ++i) out.push_back(i == 11 ? 0.0 : -sa + i * 2.0 * sa / 22.0);
  return out;
}

CriterionResult endpoint_identity(const Context& ctx) {
  CriterionResult r = start(1, "endpoint identity d(+-sqrt a) = b/(4 sqrt a)");
  r.threshold = 1e-12;
  for (const Params& p : ctx.ab_positive) {
    const double expected = p.b() / (4.0 * p.sqrt_a());
    for (double l : {-p.sqrt_a(), p.sqrt_a()}) {
      r.measured = std::max(r.measured, std::abs(density::density_series(l, p) - expected));
    }
    r.measured = std::max(r.measured, std::abs(density::endpoint_value(p) - expected));
  }
  r.pass = r.measured <= r.threshold;
  return r;
}

CriterionResult four_method_agreement(const Context& ctx) {
  CriterionResult r = start(2, "four-method density agreement");
  r.threshold = 1e-8;
  std::string worst;
  for (const Params& p : ctx.ab_positive) {
    for (double l : interior_lambdas(p)) {
      std::array<double, 4> v{};
      for (std::size_t m = 0; m < 4; ++m) v[m] = ctx.methods[m].second(l, p);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          const double diff = std::abs(v[i] - v[j]);
          if (diff > r.measured || !std::isfinite(diff)) {
            r.measured = diff;
            worst = std::string(ctx.methods[i].first) + " vs " + ctx.methods[j].first +
                    fmt(" at a=%g b=%g lambda=%.6f", p.a(), p.b(), l);
          }
        }
      }
    }
  }
  r.pass = r.measured < r.threshold;
  r.detail = "worst " + worst;
  return r;
}

CriterionResult positivity(const Context& ctx) {
  CriterionResult r = start(3, "interior density positivity");
  r.threshold = 0.0;
  r.measured = std::numeric_limits<double>::infinity();
  std::size_t failures = 0;
  for (const Params& p : ctx.ab_positive) {
    for (double l : interior_lambdas(p)) {
      for (const auto& [name, fn] : ctx.methods) {
        const double v = fn(l, p);
        r.measured = std::min(r.measured, v);
        if (!(v > 0.0)) ++failures;
      }
    }
  }
  r.pass = failures == 0;
  r.detail = "minimum interior value; non-positive samples: " + std::to_string(failures);
  return r;
}

const std::vector<double>& t_grid_41() {
  static const std::vector<double> grid = [] {
    std::vector<double> g;
    for (int i = 0; i <= 40; ++i) g.push_back(-5.0 + 0.25 * i);
    return g;
  }();
  return grid;
}

CriterionResult reconstruction(const Context& ctx) {
  CriterionResult r = start(4, "Laplace reconstruction of phi on [-5, 5]");
  r.threshold = 1e-8;
  for (const Params& p : ctx.ab_with_zero) {
    const auto m = laplace::representing_measure(p, 33);
    for (double t : t_grid_41()) {
      r.measured = std::max(r.measured, std::abs(laplace::reconstruct_phi(m, t) - specfun::phi(t, p)));
    }
  }
  r.pass = r.measured < r.threshold;
  return r;
}

CriterionResult total_mass(const Context& ctx) {
  CriterionResult r = start(5, "total mass 1 + int d = cosh sqrt(b)");
  r.threshold = 1e-9;
  for (const Params& p : ctx.ab_with_zero) {
    const auto m = laplace::representing_measure(p, 9);
    r.measured = std::max(r.measured, std::abs(laplace::total_mass(m) - std::cosh(std::sqrt(p.b()))));
  }
  r.pass = r.measured < r.threshold;
  return r;
}

CriterionResult fourier_identity(const Context& ctx) {
  CriterionResult r = start(6, "Fourier identity on the imaginary axis");
  r.threshold = 1e-8;
  for (const Params& p : ctx.ab_positive) {
    for (double tau : {0.0, 1.0, 5.0, 10.0, 50.0}) {
      r.measured = std::max(r.measured, laplace::verify_fourier(p, tau, 512));
    }
  }
  r.pass = r.measured < r.threshold;
  return r;
}

CriterionResult tail_asymptotic(const Context& ctx) {
  CriterionResult r = start(7, "tau^2-scaled tail residual bounded across decades");
  r.threshold = 2.0;
  std::vector<double> first;
  std::vector<double> last;
  for (double tau = 10.0; tau <= 100.0; tau += 0.05) first.push_back(tau);
  for (double tau = 100.0; tau <= 1000.0; tau += 0.05) last.push_back(tau);
  for (const Params& p : ctx.ab_positive) {
    const auto r1 = laplace::verify_tail_asymptotic(p, first);
    const auto r2 = laplace::verify_tail_asymptotic(p, last);
    const double m1 = *std::max_element(r1.begin(), r1.end());
    const double m2 = *std::max_element(r2.begin(), r2.end());
    r.measured = std::max(r.measured, m2 / m1);
  }
  r.pass = r.measured <= r.threshold;
  r.detail = "worst ratio max[100,1000] / max[10,100]";
  return r;
}

CriterionResult branch_correctness(const Context& ctx) {
  CriterionResult r = start(8, "branch edge limits, conjugate symmetry, w^2 = a z^2 + b");
  double edge = 0.0;
  double conj_err = 0.0;
  double square_err = 0.0;
  Lcg64 rng(ctx.seed_for(8));
  for (const Params& p : ctx.ab_positive) {
    const double h = p.slit_half_height();
    for (int i = 0; i <= 50; ++i) {
      const double eta = h * 0.99 * (-1.0 + 2.0 * i / 50.0);
      const double expected = std::sqrt(p.b() - p.a() * eta * eta);
      edge = std::max(edge, std::abs(branch::sqrt_branch({1e-8, eta}, p) - expected));
      edge = std::max(edge, std::abs(branch::sqrt_branch({-1e-8, eta}, p) + expected));
    }
    const double box = 3.0 * std::max(1.0, h);
    int accepted = 0;
    while (accepted < 1000) {
      const complex z{rng.uniform(-box, box), rng.uniform(-box, box)};
      if (branch::distance_to_slit(z, p) < 1e-6) continue;
      ++accepted;
      const complex w = branch::sqrt_branch(z, p);
      conj_err = std::max(conj_err, std::abs(branch::sqrt_branch(std::conj(z), p) - std::conj(w)) /
                                        std::max(std::abs(w), 1e-300));
      square_err = std::max(square_err, std::abs(w * w - (p.a() * z * z + p.b())) /
                                            (p.a() * std::norm(z) + p.b()));
    }
  }
  r.measured = std::max({edge / 1e-6, conj_err / 1e-12, square_err / 1e-12});
  r.threshold = 1.0;
  r.pass = edge < 1e-6 && conj_err < 1e-12 && square_err < 1e-12;
  char buf[160];
  std::snprintf(buf, sizeof buf, "edge=%.3e conj=%.3e square=%.3e (measured is worst/limit)", edge,
                conj_err, square_err);
  r.detail = buf;
  return r;
}

CriterionResult level_set_ellipse(const Context& ctx) {
  CriterionResult r = start(9, "level-set ellipse, interior/exterior signs, critical points");
  r.threshold = 1e-9;
  double crit = 0.0;
  int sign_failures = 0;
  const std::array<double, 3> fractions{0.25, 0.5, 0.75};
  std::size_t index = 0;
  for (const Params& p : ctx.ab_positive) {
    const double lambda = -fractions[index++ % 3] * p.sqrt_a();
    const auto c = branch::ellipse_for(lambda, p);
    r.measured = std::max(r.measured, branch::verify_level_set(c, p, 256));
    crit = std::max(crit, std::abs(branch::exponent_derivative(c.zeta_plus, p, lambda)));
    crit = std::max(crit, std::abs(branch::exponent_derivative(c.zeta_minus, p, lambda)));
    const double h = p.slit_half_height();
    for (complex z : {complex(0.0, 0.5 * (h + c.B)), complex(0.5 * c.A, 0.5 * c.B)}) {
      if (!(branch::uv(z, p, lambda).v < 0.0)) ++sign_failures;
    }
    for (complex z : {complex(0.0, 1.01 * c.B), complex(1.5 * c.A, 0.5 * c.B)}) {
      if (!(branch::uv(z, p, lambda).v > 0.0)) ++sign_failures;
    }
  }
  r.pass = r.measured < r.threshold && crit < 1e-10 && sign_failures == 0;
  r.detail = fmt("max |v| on ellipse; critical residual=%.3e sign failures=%g", crit, sign_failures);
  return r;
}

CriterionResult sign_dichotomy(const Context& ctx) {
  CriterionResult r = start(10, "sign dichotomy of v near 0 and near infinity");
  int failures = 0;
  int samples = 0;
  for (const Params& p : ctx.ab_positive) {
    for (double f : {0.25, 0.5, 0.75}) {
      const double lambda = -f * p.sqrt_a();
      for (int j = 0; j < 64; ++j) {
        const double angle = 2.0 * kPi * (j + 0.5) / 64.0;
        const complex dir = std::polar(1.0, angle);
        const double im_sign = dir.imag() > 0.0 ? 1.0 : -1.0;
        const double v_small = branch::uv(1e-6 * dir, p, lambda).v;
        const double big = 1e3 * (1.0 + p.slit_half_height());
        const double v_big = branch::uv(big * dir, p, lambda).v;
        samples += 2;
        if (!(v_small * im_sign < 0.0)) ++failures;
        if (!(v_big * im_sign > 0.0)) ++failures;
      }
    }
  }
  r.measured = failures;
  r.threshold = 0.0;
  r.pass = failures == 0;
  r.detail = "sign mismatches out of " + std::to_string(samples);
  return r;
}

CriterionResult taylor_routes(const Context& ctx) {
  CriterionResult r = start(11, "Taylor coefficients: integral vs Bessel vs recursion; resummation");
  r.threshold = 1e-8;
  (void)ctx;
  for (double a : {0.5, 1.0, 4.0}) {
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
      for (int k = 0; k <= 6; ++k) {
        const double integral = taylor::phi_k_integral(k, t, a);
        const double scale = 1.0 + std::abs(integral);
        if (k >= 1) {
          r.measured = std::max(r.measured, std::abs(integral - taylor::phi_k_bessel(k, t, a)) / scale);
        }
        const double psi = taylor::psi_k_recursion(k, t, std::sqrt(a)) * std::pow(a, -k);
        r.measured = std::max(r.measured, std::abs(integral - psi) / scale);
      }
    }
  }
  const double resum = taylor::phi_from_taylor(1.0, Params(1.0, 1.0), 12).value;
  const double resum_err = std::abs(resum - std::cosh(std::sqrt(2.0)));
  r.pass = r.measured < r.threshold && resum_err < 1e-9;
  r.detail = fmt("max |diff|/(1+|phi_k|); resummation error=%.3e (limit %.0e)", resum_err, 1e-9);
  return r;
}

CriterionResult derivative_series(const Context& ctx) {
  CriterionResult r = start(12, "first xi-derivative series vs closed form");
  r.threshold = 1e-8;
  (void)ctx;
  for (auto [t, eta] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{2.0, 0.5}}) {
    for (double xi : {0.0, 0.25, 0.5}) {
      const double series = taylor::phi_xi_derivative_series(1, t, eta, xi, 8);
      r.measured = std::max(r.measured, std::abs(series - taylor::first_xi_derivative_closed_form(t, eta, xi)));
    }
  }
  r.pass = r.measured < r.threshold;
  return r;
}

CriterionResult product_identity(const Context& ctx) {
  CriterionResult r = start(13, "sinh z / z = prod cosh(z / 2^m), 40 factors");
  r.threshold = 1e-12;
  (void)ctx;
  for (int i = 1; i <= 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const complex z = std::polar(static_cast<double>(i), 2.0 * kPi * j / 5.0 + 0.3);
      const auto [lhs, rhs] = specfun::product_identity_lhs_rhs(z, 40);
      r.measured = std::max(r.measured, std::abs(lhs - rhs));
    }
  }
  r.pass = r.measured < r.threshold;
  return r;
}

CriterionResult exponential_convexity(const Context& ctx) {
  CriterionResult r = start(14, "Gram PSD certificates for phi, psi and phi_k");
  r.threshold = -1e-10;
  r.measured = std::numeric_limits<double>::infinity();
  bool pass = true;
  std::uint64_t seed = ctx.seed_for(14);
  auto run = [&](const gram::RealFunction& f) {
    const auto check = gram::check_exp_convex(f, ctx.gram_trials, 8, 3.0, seed++);
    pass = pass && check.pass;
    r.measured = std::min(r.measured, check.worst_normalized_min_eigenvalue);
  };
  for (const Params& p : ctx.ab_convex) {
    run([p](double t) { return specfun::phi(t, p); });
    run([p](double t) { return specfun::psi_sinc(t, p); });
  }
  for (double a : {0.5, 1.0, 4.0}) {
    for (int k = 0; k <= 4; ++k) run([a, k](double t) { return taylor::phi_k_integral(k, t, a); });
  }
  r.pass = pass && r.measured >= r.threshold;
  r.detail = "worst normalized min eigenvalue";
  return r;
}

CriterionResult closure(const Context& ctx) {
  CriterionResult r = start(15, "closure under scaling, sums, products, limits");
  r.threshold = -1e-10;
  r.measured = std::numeric_limits<double>::infinity();
  r.pass = true;
  std::string failed;
  for (const auto& c : gram::closure_property_suite(ctx.seed_for(15), ctx.options.quick ? 30 : 100)) {
    r.measured = std::min(r.measured, c.check.worst_normalized_min_eigenvalue);
    if (!c.check.pass) {
      r.pass = false;
      failed += " " + c.name;
    }
  }
  r.detail = failed.empty() ? "all cases psd" : "failed:" + failed;
  return r;
}

CriterionResult two_point(const Context& ctx) {
  CriterionResult r = start(16, "two-point inequality sqrt(f(2t1) f(2t2)) >= f(t1+t2)");
  r.threshold = -1e-12;
  r.measured = std::numeric_limits<double>::infinity();
  Lcg64 rng(ctx.seed_for(16));
  for (const Params& p : ctx.ab_convex) {
    const gram::RealFunction fs[] = {[p](double t) { return specfun::phi(t, p); },
                                     [p](double t) { return specfun::psi_sinc(t, p); }};
    for (const auto& f : fs) {
      for (std::size_t i = 0; i < ctx.pair_count; ++i) {
        const double t1 = rng.uniform(-3.0, 3.0);
        const double t2 = rng.uniform(-3.0, 3.0);
        const double scale = std::max({f(2.0 * t1), f(2.0 * t2), std::abs(f(t1 + t2))});
        r.measured = std::min(r.measured, gram::two_point_inequality(f, t1, t2) / scale);
      }
    }
  }
  r.pass = r.measured >= r.threshold;
  r.detail = "minimum of gap / scale";
  return r;
}

CriterionResult bmv(const Context& ctx) {
  CriterionResult r = start(17, "2x2 BMV reduction and convexity");
  r.threshold = 1e-10;
  Lcg64 rng(ctx.seed_for(17));
  std::vector<double> grid;
  for (int i = 0; i <= 12; ++i) grid.push_back(-3.0 + 0.5 * i);
  int convexity_failures = 0;
  for (std::size_t i = 0; i < ctx.bmv_pairs; ++i) {
    const auto A = bmv2::random_hermitian(rng);
    const auto B = bmv2::random_hermitian(rng);
    r.measured = std::max(r.measured, bmv2::verify_reduction(A, B, grid));
    if (!bmv2::bmv_convexity_check(A, B, ctx.seed_for(17) + i, ctx.gram_trials).pass) ++convexity_failures;
  }
  r.pass = r.measured < r.threshold && convexity_failures == 0;
  r.detail = "max relative residual; convexity failures: " + std::to_string(convexity_failures);
  return r;
}

CriterionResult determinism_and_fault(const Context& ctx) {
  CriterionResult r = start(18, "determinism and fault injection");
  Options clean = ctx.options;
  clean.fault = Fault::none;
  clean.quick = true;
  const Context c1(clean);
  const Context c2(clean);
  const std::string first = format_report({four_method_agreement(c1), bmv(c1)});
  const std::string second = format_report({four_method_agreement(c2), bmv(c2)});
  Options faulty = clean;
  faulty.fault = Fault::density_sign;
  const bool fault_caught = !four_method_agreement(Context(faulty)).pass;
  r.pass = first == second && fault_caught;
  r.measured = r.pass ? 0.0 : 1.0;
  r.detail = std::string("repeat runs ") + (first == second ? "identical" : "differ") +
             "; sign fault " + (fault_caught ? "detected by criterion 2" : "NOT detected");
  return r;
}

CriterionResult guarded(int id, const char* name, const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    CriterionResult r = start(id, name);
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
}

}  // namespace

std::vector<CriterionResult> run(const Options& options) {
  const Context ctx(options);
  using Fn = CriterionResult (*)(const Context&);
  const std::array<std::pair<const char*, Fn>, 18> criteria{{
      {"endpoint identity", endpoint_identity},
      {"four-method density agreement", four_method_agreement},
      {"interior density positivity", positivity},
      {"Laplace reconstruction", reconstruction},
      {"total mass", total_mass},
      {"Fourier identity", fourier_identity},
      {"tail asymptotic", tail_asymptotic},
      {"branch correctness", branch_correctness},
      {"level-set ellipse", level_set_ellipse},
      {"sign dichotomy", sign_dichotomy},
      {"Taylor coefficients", taylor_routes},
      {"derivative series", derivative_series},
      {"product identity", product_identity},
      {"exponential convexity", exponential_convexity},
      {"closure properties", closure},
      {"two-point inequality", two_point},
      {"BMV 2x2", bmv},
      {"determinism and fault injection", determinism_and_fault},
  }};
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, fn] = criteria[i];
    results.push_back(guarded(static_cast<int>(i + 1), name, [&] { return fn(ctx); }));
  }
  return results;
}

std::string format_report(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "[%s] %02d %-s: measured=%.6e threshold=%.3e", r.pass ? "PASS" : "FAIL",
                  r.id, r.name.c_str(), r.measured, r.threshold);
    out << buf;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  out << passed << "/" << results.size() << " criteria passed\n";
  return out.str();
}

bool all_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

}  // namespace ecx::acceptance
