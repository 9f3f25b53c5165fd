#include "polyanalytic/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "polyanalytic/csv.hpp"
#include "polyanalytic/function_io.hpp"

namespace polyanalytic::cli {

namespace {

struct RawArgs {
  std::string space;
  std::string domain = "disk";
  double p = 2;
  double alpha = 0;
  double beta = 1;

  std::string weight = "uniform";
  double weight_alpha = 1;
  double weight_beta = 1;
  int n = 0;
  double gamma = 1;
  double theta_max = 0;
  std::string radial = "power-law";
  std::string angular = "uniform";

  std::string function;
  std::vector<double> r_grid = default_r_grid();
  double r = 0.99;
  std::vector<int> m_grid;

  int quad_nr = 128;
  int quad_ntheta = 256;
  double quad_R = 0;
  double quad_rel_tol = 1e-9;
  int quad_max_level = 1;

  double threshold = 0.02;
  double tolerance = 1e-3;
  std::string output;
  std::uint64_t seed = 20240501;
  long mc_samples = 1000000;

  int k = 0;
  int k_max = 0;
  double r0 = 0.5;
  int cond_nr = 64;
  int cond_nz = 4096;
  double cap = 1e6;
};

struct Flags {
  CLI::Option* p = nullptr;
  CLI::Option* alpha = nullptr;
  CLI::Option* beta = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* theta_max = nullptr;
  CLI::Option* quad_R = nullptr;
  CLI::Option* k_max = nullptr;
  CLI::Option* output = nullptr;
};

const std::vector<std::string> kWeights = {"uniform",     "exp-abs-pow", "exp-re-pow",
                                           "exp-abs",     "angular-poly", "product"};

void add_space_options(CLI::App* sub, RawArgs& raw, Flags& flags, bool space_required) {
  auto* space = sub->add_option("--space", raw.space, "bergman | dirichlet | besov")
                    ->check(CLI::IsMember({"bergman", "dirichlet", "besov"}));
  if (space_required) space->required();
  sub->add_option("--domain", raw.domain, "disk | halfplane")->check(CLI::IsMember({"disk", "halfplane"}));
  flags.p = sub->add_option("--p", raw.p, "exponent p > 0 (besov: p >= 2)");
  if (space_required) flags.p->required();
  flags.alpha = sub->add_option("--alpha", raw.alpha, "half-plane Im(z)^alpha exponent");
  flags.beta = sub->add_option("--beta", raw.beta, "half-plane exp(-beta |z|^2) rate");
}

void add_weight_options(CLI::App* sub, RawArgs& raw, Flags& flags) {
  sub->add_option("--weight", raw.weight, "uniform | exp-abs-pow | exp-re-pow | exp-abs | angular-poly | product")
      ->check(CLI::IsMember(kWeights));
  sub->add_option("--weight-alpha", raw.weight_alpha, "angular-poly exponent alpha");
  sub->add_option("--weight-beta", raw.weight_beta, "exp-abs-pow / exp-re-pow rate beta");
  flags.n = sub->add_option("--n", raw.n, "exp-abs-pow / exp-re-pow power n");
  sub->add_option("--gamma", raw.gamma, "product power-law exponent gamma");
  flags.theta_max = sub->add_option("--theta-max", raw.theta_max, "angular-poly theta_max (default 2pi disk, pi half-plane)");
  sub->add_option("--radial", raw.radial, "product radial profile: power-law | exp-abs-pow")
      ->check(CLI::IsMember({"power-law", "exp-abs-pow"}));
  sub->add_option("--angular", raw.angular, "product angular profile: uniform | angular-poly")
      ->check(CLI::IsMember({"uniform", "angular-poly"}));
}

void add_quad_options(CLI::App* sub, RawArgs& raw, Flags& flags) {
  sub->add_option("--quad-nr", raw.quad_nr, "radial quadrature nodes (default 128)")->check(CLI::PositiveNumber);
  sub->add_option("--quad-ntheta", raw.quad_ntheta, "angular quadrature nodes (default 256)")
      ->check(CLI::PositiveNumber);
  flags.quad_R = sub->add_option("--quad-R", raw.quad_R, "half-plane truncation radius (default auto)");
  sub->add_option("--quad-rel-tol", raw.quad_rel_tol, "refinement tolerance (default 1e-9)");
  sub->add_option("--quad-max-level", raw.quad_max_level, "resolution doublings allowed (default 1)")
      ->check(CLI::NonNegativeNumber);
}

void add_output(CLI::App* sub, RawArgs& raw, Flags& flags) {
  flags.output = sub->add_option("--output", raw.output, "CSV output path (default stdout)");
}

WeightSpec build_weight(const RawArgs& raw, const Flags& flags) {
  const auto angular_poly = [&] {
    weight::AngularPoly a{raw.weight_alpha, std::nullopt};
    if (flags.theta_max->count() > 0) a.theta_max = raw.theta_max;
    return a;
  };
  const auto exp_abs_pow = [&] { return weight::ExpAbsPow{raw.weight_beta, flags.n->count() > 0 ? raw.n : 2}; };
  WeightSpec w;
  if (raw.weight == "uniform") {
    w = weight::Uniform{};
  } else if (raw.weight == "exp-abs-pow") {
    w = exp_abs_pow();
  } else if (raw.weight == "exp-re-pow") {
    w = weight::ExpRePow{raw.weight_beta, flags.n->count() > 0 ? raw.n : 1};
  } else if (raw.weight == "exp-abs") {
    w = weight::ExpAbs{};
  } else if (raw.weight == "angular-poly") {
    w = angular_poly();
  } else {
    weight::Product prod;
    if (raw.radial == "power-law")
      prod.radial = weight::PowerLaw{raw.gamma};
    else
      prod.radial = exp_abs_pow();
    if (raw.angular == "angular-poly")
      prod.angular = angular_poly();
    else
      prod.angular = weight::Uniform{};
    w = prod;
  }
  validate(w);
  return w;
}

SpaceKind parse_kind(const std::string& s) {
  if (s == "bergman") return SpaceKind::bergman;
  if (s == "besov") return SpaceKind::besov;
  return SpaceKind::dirichlet;
}

std::vector<double> checked_r_grid(const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0 && grid[i] < 1)) throw UsageError("--r-grid: r values must lie in (0, 1)");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw UsageError("--r-grid: values must be strictly increasing");
  }
  if (grid.empty()) throw UsageError("--r-grid: at least one value required");
  return grid;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RawArgs raw;
  std::map<const CLI::App*, Flags> flags_by_cmd;
  CLI::App app{"Weighted polyanalytic Bergman/Dirichlet/Besov norms and dilatation experiments", "polyanalytic"};
  app.require_subcommand(1);

  auto* norm_cmd = app.add_subcommand("norm", "evaluate a norm; CSV full_norm,seminorm,point_term");
  auto* converge_cmd = app.add_subcommand("converge", "dilatation convergence; CSV r,err_seminorm,err_fullnorm");
  auto* limsup_cmd = app.add_subcommand("limsup-check", "limsup certificate; CSV r,lhs_dz,lhs_dzbar,rhs_dz,rhs_dzbar");
  auto* approx_cmd = app.add_subcommand("approx", "polynomial approximation; CSV r,m,error");
  auto* weight_cmd = app.add_subcommand("check-weight", "grid check of r^k w(z/r) <= C w(z)");
  auto* suite_cmd = app.add_subcommand("suite", "run the theorem matrix; one CSV row per cell");

  for (auto* sub : {norm_cmd, converge_cmd, limsup_cmd, approx_cmd}) {
    Flags& flags = flags_by_cmd[sub];
    add_space_options(sub, raw, flags, true);
    add_weight_options(sub, raw, flags);
    add_quad_options(sub, raw, flags);
    add_output(sub, raw, flags);
    sub->add_option("--function", raw.function, "function file ('q <int>' header, then 'k j re im' lines)")
        ->required();
    sub->add_option("--seed", raw.seed, "random seed");
  }
  for (auto* sub : {converge_cmd, limsup_cmd})
    sub->add_option("--r-grid", raw.r_grid, "comma-separated r values in (0,1)")->delimiter(',');
  converge_cmd->add_option("--threshold", raw.threshold, "verdict threshold relative to ||f|| (default 0.02)");
  limsup_cmd->add_option("--tolerance", raw.tolerance, "relative slack on RHS (default 1e-3)");
  approx_cmd->add_option("--r", raw.r, "dilation r in (0,1)")->required();
  approx_cmd->add_option("--m-grid", raw.m_grid, "comma-separated truncation degrees")->delimiter(',')->required();

  weight_cmd->add_option("--domain", raw.domain, "disk | halfplane")->check(CLI::IsMember({"disk", "halfplane"}));
  add_weight_options(weight_cmd, raw, flags_by_cmd[weight_cmd]);
  weight_cmd->add_option("--k", raw.k, "power k (default 0)")->check(CLI::NonNegativeNumber);
  flags_by_cmd[weight_cmd].k_max = weight_cmd->add_option("--k-max", raw.k_max, "search the smallest k <= k-max instead")
                    ->check(CLI::NonNegativeNumber);
  weight_cmd->add_option("--r0", raw.r0, "lower end of the r range (default 0.5)");
  weight_cmd->add_option("--n-r", raw.cond_nr, "r grid size (default 64)")->check(CLI::PositiveNumber);
  weight_cmd->add_option("--n-z", raw.cond_nz, "z sample size (default 4096)")->check(CLI::PositiveNumber);
  weight_cmd->add_option("--cap", raw.cap, "divergence cap (default 1e6)");
  add_output(weight_cmd, raw, flags_by_cmd[weight_cmd]);

  add_quad_options(suite_cmd, raw, flags_by_cmd[suite_cmd]);
  add_output(suite_cmd, raw, flags_by_cmd[suite_cmd]);
  suite_cmd->add_option("--r-grid", raw.r_grid, "comma-separated r values in (0,1)")->delimiter(',');
  suite_cmd->add_option("--threshold", raw.threshold, "verdict threshold relative to ||f|| (default 0.02)");
  suite_cmd->add_option("--seed", raw.seed, "seed of the half-plane Monte Carlo cross-check");
  suite_cmd->add_option("--mc-samples", raw.mc_samples, "Monte Carlo samples (default 1e6, 0 disables)")
      ->check(CLI::NonNegativeNumber);

  RunConfig config;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    config.help = true;
    config.help_text = app.help();
    return config;
  } catch (const CLI::CallForAllHelp&) {
    config.help = true;
    config.help_text = app.help("", CLI::AppFormatMode::All);
    return config;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    throw UsageError(msg);
  }

  const CLI::App* parsed = app.get_subcommands().front();
  const Flags& flags = flags_by_cmd[parsed];
  config.subcommand = parsed->get_name();
  config.seed = raw.seed;
  config.mc_samples = raw.mc_samples;
  if (flags.output && flags.output->count() > 0) config.output = raw.output;

  try {
    config.space.domain = raw.domain == "halfplane" ? Domain::upper_half_plane : Domain::unit_disk;
    if (parsed != suite_cmd) config.space.weight = build_weight(raw, flags);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  auto& quad = config.experiment.quadrature;
  quad.n_radial = raw.quad_nr;
  quad.n_angular = raw.quad_ntheta;
  quad.rel_tol = raw.quad_rel_tol;
  quad.max_level = raw.quad_max_level;
  if (!(raw.quad_rel_tol > 0)) throw UsageError("--quad-rel-tol must be > 0");
  if (flags.quad_R && flags.quad_R->count() > 0) {
    if (!(raw.quad_R > 0)) throw UsageError("--quad-R must be > 0");
    quad.radius = raw.quad_R;
  }
  config.experiment.threshold = raw.threshold;
  config.experiment.limsup_tolerance = raw.tolerance;

  if (config.subcommand == "check-weight") {
    if (!(raw.r0 > 0 && raw.r0 < 1)) throw UsageError("--r0 must lie in (0, 1)");
    config.k = raw.k;
    if (flags.k_max->count() > 0) config.k_max = raw.k_max;
    config.r0 = raw.r0;
    config.condition_grid = ConditionGrid{raw.cond_nr, raw.cond_nz, raw.cap};
    return config;
  }
  if (config.subcommand == "suite") {
    config.r_grid = checked_r_grid(raw.r_grid);
    return config;
  }

  config.space.kind = parse_kind(raw.space);
  config.space.p = raw.p;
  const bool has_alpha = flags.alpha->count() > 0;
  const bool has_beta = flags.beta->count() > 0;
  if (config.space.domain == Domain::upper_half_plane) {
    if (!has_alpha || !has_beta) throw UsageError("--domain halfplane requires both --alpha and --beta");
    config.space.half_plane = HalfPlaneParams{raw.alpha, raw.beta};
  } else if (has_alpha || has_beta) {
    throw UsageError("--alpha/--beta apply to --domain halfplane only");
  }
  try {
    config.space.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (config.space.domain == Domain::upper_half_plane && raw.beta == 0 && !quad.radius)
    throw UsageError("--beta 0 on the half-plane requires an explicit truncation radius --quad-R");
  if (config.subcommand == "limsup-check" && config.space.kind == SpaceKind::bergman)
    throw UsageError("limsup-check requires --space dirichlet or besov");

  config.r_grid = checked_r_grid(raw.r_grid);
  if (config.subcommand == "approx") {
    if (!(raw.r > 0 && raw.r < 1)) throw UsageError("--r must lie in (0, 1)");
    config.r = raw.r;
    for (std::size_t i = 0; i < raw.m_grid.size(); ++i) {
      if (raw.m_grid[i] < 0) throw UsageError("--m-grid: values must be >= 0");
      if (i > 0 && raw.m_grid[i] <= raw.m_grid[i - 1]) throw UsageError("--m-grid: values must be strictly increasing");
    }
    config.m_grid = raw.m_grid;
  }

  config.function_path = raw.function;
  try {
    config.function = load_function(raw.function);
  } catch (const FunctionFormatError& e) {
    throw UsageError(raw.function + ": " + e.what());
  }
  return config;
}

MonteCarloEstimate monte_carlo_halfplane_moment(long samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("Monte Carlo needs at least 2 samples");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  double sum = 0, sum_sq = 0;
  // The integrand does not depend on Re z, so only Im z is drawn.
  for (long i = 0; i < samples; ++i) {
    const double y = normal(rng);
    const double g = y > 0 ? y : 0;
    sum += g;
    sum_sq += g * g;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq / n - mean * mean) * n / (n - 1));
  return {std::numbers::pi * mean, std::numbers::pi * std::sqrt(var / n)};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.help) {
    out << config.help_text;
    return kExitOk;
  }
  std::ofstream file;
  if (config.output) {
    file.open(*config.output);
    if (!file) {
      err << "error: cannot open output file '" << *config.output << "'\n";
      return kExitInvalid;
    }
  }
  std::ostream& sink = config.output ? static_cast<std::ostream&>(file) : out;

  const auto warn_quadrature = [&](bool converged, const QuadratureStatus* status = nullptr) {
    if (!converged) err << "warning: quadrature refinement did not reach --quad-rel-tol\n";
    if (status && status->truncated) err << "note: half-plane integral truncated at R = " << status->radius << "\n";
  };

  const auto& cmd = config.subcommand;
  if (cmd == "norm") {
    const NormResult result = norm(*config.function, config.space, config.experiment.quadrature);
    emit_csv(result, sink);
    warn_quadrature(result.quadrature.converged, &result.quadrature);
    return kExitOk;
  }
  if (cmd == "converge") {
    const auto report =
        dilatation_convergence(*config.function, config.space, config.r_grid, config.experiment, config.function_path);
    emit_csv(report, sink);
    warn_quadrature(report.quadrature_converged);
    if (report.truncated) err << "note: half-plane integral truncated at an explicit radius\n";
    err << "verdict: " << to_string(report.verdict) << " (||f|| = " << format_double(report.norm_f) << ")\n";
    return report.verdict == Verdict::converged ? kExitOk : kExitFailed;
  }
  if (cmd == "limsup-check") {
    const auto report = limsup_check(*config.function, config.space, config.r_grid, config.experiment);
    emit_csv(report, sink);
    warn_quadrature(report.quadrature_converged);
    err << "certificate: " << (report.certified ? "holds" : "violated") << " (margin = " << format_double(report.margin)
        << ")\n";
    return report.certified ? kExitOk : kExitFailed;
  }
  if (cmd == "approx") {
    const auto report = poly_approx(*config.function, config.space, config.r, config.m_grid, config.experiment);
    emit_csv(report, sink);
    warn_quadrature(report.quadrature_converged);
    err << "verdict: " << to_string(report.verdict) << " (||f - f_r|| = " << format_double(report.dilatation_error)
        << ")\n";
    return report.verdict == Verdict::converged ? kExitOk : kExitFailed;
  }
  if (cmd == "check-weight") {
    if (config.k_max) {
      const auto witness = find_min_k(config.space.weight, *config.k_max, config.r0, config.space.domain,
                                      config.condition_grid);
      if (witness) {
        emit_csv(ConditionCheck{true, *witness}, sink);
        return kExitOk;
      }
      emit_csv(check_condition(config.space.weight, *config.k_max, config.r0, config.space.domain,
                               config.condition_grid),
               sink);
      return kExitFailed;
    }
    const auto check =
        check_condition(config.space.weight, config.k, config.r0, config.space.domain, config.condition_grid);
    emit_csv(check, sink);
    return check.satisfied ? kExitOk : kExitFailed;
  }
  if (cmd == "suite") {
    const auto summary = run_theorem_suite(theorem_matrix(), config.experiment, config.r_grid);
    emit_csv(summary, sink);
    bool ok = summary.all_converged();
    if (config.mc_samples > 0) {
      const auto grid = halfplane_grid<double>(config.experiment.quadrature.radius.value_or(8.0),
                                               config.experiment.quadrature.n_radial,
                                               config.experiment.quadrature.n_angular);
      const double quad = integrate(grid, [](std::complex<double> z) { return z.imag() * std::exp(-std::norm(z)); });
      const auto mc = monte_carlo_halfplane_moment(config.mc_samples, config.seed);
      const bool agree = std::abs(quad - mc.value) <= 3 * mc.std_error;
      err << "half-plane quadrature vs Monte Carlo (seed " << config.seed << "): " << format_double(quad) << " vs "
          << format_double(mc.value) << " +- " << format_double(mc.std_error) << (agree ? " ok" : " MISMATCH")
          << "\n";
      ok = ok && agree;
    }
    std::size_t failed = 0;
    for (const auto& cell : summary.cells) failed += cell.report.verdict != Verdict::converged;
    err << "suite: " << summary.cells.size() - failed << "/" << summary.cells.size() << " cells converged\n";
    return ok ? kExitOk : kExitFailed;
  }
  err << "error: unknown subcommand '" << cmd << "'\n";
  return kExitInvalid;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  try {
    return run(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace polyanalytic::cli
