#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecx/acceptance.hpp"
#include "ecx/bmv2.hpp"
#include "ecx/density.hpp"
#include "ecx/error.hpp"
#include "ecx/gram.hpp"
#include "ecx/io.hpp"
#include "ecx/laplace.hpp"
#include "ecx/specfun.hpp"
#include "ecx/taylor.hpp"

namespace {

using ecx::io::format_number;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;

struct Globals {
  std::string format = "csv";
  std::uint64_t seed = 42;
  bool json() const { return format == "json"; }
};

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps == 1) return {lo};
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * i / (steps - 1));
  return out;
}

struct DensityArgs {
  double a = 1.0, b = 1.0;
  std::string method = "series";
  std::size_t n_lambda = 21;
  std::size_t n = 0;
};

int cmd_density(const Globals& g, const DensityArgs& args) {
  const auto method = *ecx::density::parse_method(args.method);
  const ecx::Params p(args.a, args.b);
  const auto profile = ecx::density::density_profile(p, args.n_lambda, method, args.n);
  if (g.json()) {
    std::cout << ecx::io::to_json(profile).dump(2) << '\n';
    return kOk;
  }
  const std::string name(ecx::density::to_string(method));
  std::cout << "lambda,density,method\n";
  for (std::size_t i = 0; i < profile.lambdas.size(); ++i) {
    std::cout << format_number(profile.lambdas[i]) << ',' << format_number(profile.values[i]) << ',' << name << '\n';
  }
  return kOk;
}

struct RangeArgs {
  double t_min = -5.0, t_max = 5.0;
  int t_steps = 41;
};

int cmd_reconstruct(const Globals& g, double a, double b, const RangeArgs& range) {
  const ecx::Params p(a, b);
  const auto measure = ecx::laplace::representing_measure(p, 9);
  double worst = 0.0;
  json rows = json::array();
  std::string csv = "t,phi_direct,phi_reconstructed,abs_err\n";
  for (double t : linspace(range.t_min, range.t_max, range.t_steps)) {
    const double direct = ecx::specfun::phi(t, p);
    const double rec = ecx::laplace::reconstruct_phi(measure, t);
    const double err = std::abs(direct - rec);
    worst = std::max(worst, err);
    rows.push_back({{"t", t}, {"phi_direct", direct}, {"phi_reconstructed", rec}, {"abs_err", err}});
    csv += format_number(t) + ',' + format_number(direct) + ',' + format_number(rec) + ',' + format_number(err) + '\n';
  }
  if (g.json()) {
    std::cout << json{{"rows", rows}, {"max_abs_err", worst}}.dump(2) << '\n';
  } else {
    std::cout << csv;
  }
  return worst < 1e-6 ? kOk : kVerifyFailed;
}

struct GramArgs {
  std::string function = "phi";
  double a = 1.0, b = 1.0;
  int k = 0;
  std::vector<double> points;
  bool random = false;
  std::size_t n = 8;
  std::size_t trials = 100;
};

int cmd_gram(const Globals& g, const GramArgs& args) {
  const ecx::Params p(args.a, args.b);
  ecx::gram::RealFunction f;
  if (args.function == "phi") {
    f = [p](double t) { return ecx::specfun::phi(t, p); };
  } else if (args.function == "psi") {
    f = [p](double t) { return ecx::specfun::psi_sinc(t, p); };
  } else {
    f = [k = args.k, a = args.a](double t) { return ecx::taylor::phi_k_integral(k, t, a); };
  }
  ecx::gram::GramReport report;
  json extra;
  if (args.random) {
    const auto check = ecx::gram::check_exp_convex(f, args.trials, args.n, 3.0, g.seed);
    report = check.worst;
    extra = {{"trials", check.trials}, {"worst_normalized_min_eigenvalue", check.worst_normalized_min_eigenvalue}};
  } else {
    report = ecx::gram::psd_verdict(ecx::gram::gram_matrix(f, args.points));
  }
  json doc = ecx::io::to_json(report);
  if (!extra.is_null()) doc.update(extra);
  if (g.json()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "min_eigenvalue,scale,verdict\n"
              << format_number(report.min_eigenvalue) << ',' << format_number(report.scale) << ','
              << ecx::gram::to_string(report.verdict) << '\n';
  }
  return report.verdict == ecx::gram::Verdict::psd ? kOk : kVerifyFailed;
}

struct TaylorArgs {
  double a = 1.0, t = 1.0;
  int k_max = 6;
  std::string method = "integral";
};

int cmd_taylor(const Globals& g, const TaylorArgs& args) {
  json rows = json::array();
  std::string csv = "k,phi_k\n";
  for (int k = 0; k <= args.k_max; ++k) {
    double value = 0.0;
    if (args.method == "integral" || (args.method == "bessel" && k == 0)) {
      value = ecx::taylor::phi_k_integral(k, args.t, args.a);
    } else if (args.method == "bessel") {
      value = ecx::taylor::phi_k_bessel(k, args.t, args.a);
    } else {
      value = ecx::taylor::psi_k_recursion(k, args.t, std::sqrt(args.a)) * std::pow(args.a, -k);
    }
    rows.push_back({{"k", k}, {"phi_k", value}});
    csv += std::to_string(k) + ',' + format_number(value) + '\n';
  }
  if (g.json()) {
    std::cout << json{{"rows", rows}, {"method", args.method}}.dump(2) << '\n';
  } else {
    std::cout << csv;
  }
  return kOk;
}

ecx::bmv2::Hermitian2 to_hermitian(const std::vector<double>& v) { return {v[0], v[1], {v[2], v[3]}}; }

int cmd_bmv2(const Globals& g, const std::vector<double>& A_in, const std::vector<double>& B_in,
             const RangeArgs& range) {
  const auto A = to_hermitian(A_in);
  const auto B = to_hermitian(B_in);
  const auto reduction = ecx::bmv2::reduce_to_phi(A, B);
  json rows = json::array();
  std::string csv = "t,trace_exp,reduced,abs_err\n";
  for (double t : linspace(range.t_min, range.t_max, range.t_steps)) {
    const double direct = ecx::bmv2::trace_exp(t, A, B);
    const double reduced = ecx::bmv2::reduced_trace(reduction, t);
    const double err = std::abs(direct - reduced);
    rows.push_back({{"t", t}, {"trace_exp", direct}, {"reduced", reduced}, {"abs_err", err}});
    csv += format_number(t) + ',' + format_number(direct) + ',' + format_number(reduced) + ',' +
           format_number(err) + '\n';
  }
  if (g.json()) {
    std::cout << json{{"rows", rows}, {"reduction", ecx::io::to_json(reduction)}}.dump(2) << '\n';
  } else {
    std::cout << csv;
  }
  return kOk;
}

int cmd_measure(double a, double b, std::size_t n_lambda) {
  const auto m = ecx::laplace::representing_measure(ecx::Params(a, b), n_lambda);
  std::cout << ecx::io::to_json(m).dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Globals& g, bool quick, const std::string& fault) {
  ecx::acceptance::Options options;
  options.quick = quick;
  options.seed = g.seed;
  options.fault = fault == "density-sign" ? ecx::acceptance::Fault::density_sign : ecx::acceptance::Fault::none;
  const auto results = ecx::acceptance::run(options);
  std::cout << ecx::acceptance::format_report(results);
  return ecx::acceptance::all_pass(results) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace representation and exponential convexity of cosh(sqrt(a t^2 + b))"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "Seed for random point sets");

  auto positive = CLI::PositiveNumber;
  auto nonneg = CLI::NonNegativeNumber;

  DensityArgs dens;
  auto* density = app.add_subcommand("density", "Sample the density on a lambda grid");
  density->add_option("--a", dens.a)->required()->check(positive);
  density->add_option("--b", dens.b)->required()->check(nonneg);
  density->add_option("--method", dens.method)->check(CLI::IsMember({"series", "bessel", "quad", "contour"}));
  density->add_option("--n-lambda", dens.n_lambda)->check(CLI::Range(2, 100000));
  density->add_option("--n", dens.n, "Quadrature order or contour node count (0 = default)");

  double ra = 1.0, rb = 1.0;
  RangeArgs range;
  auto* reconstruct = app.add_subcommand("reconstruct", "Compare phi with its Laplace reconstruction");
  reconstruct->add_option("--a", ra)->required()->check(positive);
  reconstruct->add_option("--b", rb)->required()->check(nonneg);
  reconstruct->add_option("--t-min", range.t_min);
  reconstruct->add_option("--t-max", range.t_max);
  reconstruct->add_option("--t-steps", range.t_steps)->check(CLI::Range(1, 1000000));

  GramArgs gr;
  auto* gram = app.add_subcommand("gram", "Gram matrix PSD certificate");
  gram->add_option("--function", gr.function)->check(CLI::IsMember({"phi", "psi", "coeff"}));
  gram->add_option("--a", gr.a)->check(positive);
  gram->add_option("--b", gr.b)->check(nonneg);
  gram->add_option("--k", gr.k)->check(CLI::Range(0, 64));
  auto* points = gram->add_option("--points", gr.points)->delimiter(',');
  auto* random = gram->add_flag("--random", gr.random);
  gram->add_option("--n", gr.n, "Maximum points per trial")->check(CLI::Range(1, 64));
  gram->add_option("--trials", gr.trials)->check(CLI::Range(1, 1000000));
  points->excludes(random);

  TaylorArgs tay;
  auto* taylor = app.add_subcommand("taylor", "Taylor coefficients of phi in b");
  taylor->add_option("--a", tay.a)->required()->check(positive);
  taylor->add_option("--t", tay.t)->required();
  taylor->add_option("--k-max", tay.k_max)->check(CLI::Range(0, 64));
  taylor->add_option("--method", tay.method)->check(CLI::IsMember({"integral", "bessel", "recursion"}));

  std::vector<double> A, B;
  RangeArgs brange{-3.0, 3.0, 13};
  auto* bmv = app.add_subcommand("bmv2", "2x2 trace exp(tA + B) and its phi reduction");
  bmv->add_option("--A", A, "h11 h22 Re(h12) Im(h12)")->required()->expected(4)->delimiter(',');
  bmv->add_option("--B", B, "h11 h22 Re(h12) Im(h12)")->required()->expected(4)->delimiter(',');
  bmv->add_option("--t-min", brange.t_min);
  bmv->add_option("--t-max", brange.t_max);
  bmv->add_option("--t-steps", brange.t_steps)->check(CLI::Range(1, 1000000));

  double ma = 1.0, mb = 1.0;
  std::size_t m_lambda = 21;
  auto* measure = app.add_subcommand("measure", "Representing measure as JSON");
  measure->add_option("--a", ma)->required()->check(positive);
  measure->add_option("--b", mb)->required()->check(nonneg);
  measure->add_option("--n-lambda", m_lambda)->check(CLI::Range(9, 100000));

  bool quick = false;
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
  verify->add_flag("--quick", quick);
  verify->add_option("--inject-fault", fault)->check(CLI::IsMember({"none", "density-sign"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*density) return cmd_density(g, dens);
    if (*reconstruct) return cmd_reconstruct(g, ra, rb, range);
    if (*gram) {
      if (gr.points.empty() && !gr.random) {
        std::cerr << "gram: one of --points or --random is required\n";
        return kUsage;
      }
      return cmd_gram(g, gr);
    }
    if (*taylor) return cmd_taylor(g, tay);
    if (*bmv) return cmd_bmv2(g, A, B, brange);
    if (*measure) return cmd_measure(ma, mb, m_lambda);
    if (*verify) return cmd_verify(g, quick, fault);
  } catch (const ecx::NumericError& e) {
    std::cerr << "error (" << ecx::to_string(e.kind()) << "): " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}
