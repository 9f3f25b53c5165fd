#include "polyanalytic/experiments.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace polyanalytic {

namespace {

void check_r_grid(const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw std::invalid_argument("r grid must not be empty");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0 && r_grid[i] < 1)) throw std::invalid_argument("r values must lie in (0, 1)");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw std::invalid_argument("r grid must be strictly increasing");
  }
}

ConvergenceReport convergence_with(const NormEvaluator& evaluator, const PolyFunctiond& f,
                                   const std::vector<double>& r_grid, const ExperimentOptions& options,
                                   std::string function_name) {
  check_r_grid(r_grid);
  ConvergenceReport report;
  report.spec = evaluator.spec();
  report.function = std::move(function_name);
  report.threshold = options.threshold;

  const NormResult nf = evaluator.norm(f);
  report.norm_f = nf.full_norm;
  report.quadrature_converged = nf.quadrature.converged;
  report.truncated = nf.quadrature.truncated;

  for (double r : r_grid) {
    const NormResult diff = evaluator.norm_of_difference(dilate(f, DilationFactor<double>(r)), f);
    report.rows.push_back({r, diff.seminorm, diff.full_norm, diff.point_term});
    report.quadrature_converged = report.quadrature_converged && diff.quadrature.converged;
  }

  const double first = report.rows.front().err_fullnorm;
  const double last = report.rows.back().err_fullnorm;
  const bool decreasing = last < first || (first == 0 && last == 0);
  const bool small = last <= options.threshold * report.norm_f;
  report.verdict = decreasing && small ? Verdict::converged : Verdict::not_converged;
  return report;
}

std::string fmt_p(double p) {
  std::string s = std::to_string(p);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::converged ? "converged" : "not_converged"; }

std::vector<double> default_r_grid() { return {0.5, 0.9, 0.99, 0.999}; }

ConvergenceReport dilatation_convergence(const PolyFunctiond& f, const SpaceSpec& spec,
                                         const std::vector<double>& r_grid, const ExperimentOptions& options,
                                         std::string function_name) {
  check_r_grid(r_grid);
  return convergence_with(NormEvaluator(spec, options.quadrature), f, r_grid, options, std::move(function_name));
}

LimsupReport limsup_check(const PolyFunctiond& f, const SpaceSpec& spec, const std::vector<double>& r_grid,
                          const ExperimentOptions& options) {
  check_r_grid(r_grid);
  if (spec.kind == SpaceKind::bergman)
    throw std::invalid_argument("limsup check applies to dirichlet and besov spaces");
  const NormEvaluator evaluator(spec, options.quadrature);

  LimsupReport report;
  report.tolerance = options.limsup_tolerance;
  const auto rhs_dz = evaluator.integral_of_power(d_z(f));
  const auto rhs_dzbar = evaluator.integral_of_power(d_zbar(f));
  report.rhs_dz = rhs_dz.value;
  report.rhs_dzbar = rhs_dzbar.value;
  report.quadrature_converged = rhs_dz.converged && rhs_dzbar.converged;

  const double bound_dz = report.rhs_dz * (1 + report.tolerance);
  const double bound_dzbar = report.rhs_dzbar * (1 + report.tolerance);
  report.certified = true;
  report.margin = -std::numeric_limits<double>::infinity();
  for (double r : r_grid) {
    const PolyFunctiond fr = dilate(f, DilationFactor<double>(r));
    const auto lhs_dz = evaluator.integral_of_power(d_z(fr));
    const auto lhs_dzbar = evaluator.integral_of_power(d_zbar(fr));
    report.rows.push_back({r, lhs_dz.value, lhs_dzbar.value});
    report.quadrature_converged = report.quadrature_converged && lhs_dz.converged && lhs_dzbar.converged;
    report.margin = std::max({report.margin, lhs_dz.value - report.rhs_dz, lhs_dzbar.value - report.rhs_dzbar});
    if (lhs_dz.value > bound_dz || lhs_dzbar.value > bound_dzbar) report.certified = false;
  }
  return report;
}

ApproxReport poly_approx(const PolyFunctiond& f, const SpaceSpec& spec, double r, const std::vector<int>& m_grid,
                         const ExperimentOptions& options) {
  if (!(r > 0 && r < 1)) throw std::invalid_argument("r must lie in (0, 1)");
  if (m_grid.empty()) throw std::invalid_argument("m grid must not be empty");
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (m_grid[i] < 0) throw std::invalid_argument("m values must be >= 0");
    if (i > 0 && m_grid[i] <= m_grid[i - 1]) throw std::invalid_argument("m grid must be strictly increasing");
  }
  const NormEvaluator evaluator(spec, options.quadrature);
  const PolyFunctiond fr = dilate(f, DilationFactor<double>(r));

  ApproxReport report;
  report.spec = spec;
  const NormResult dil = evaluator.norm_of_difference(f, fr);
  report.dilatation_error = dil.full_norm;
  report.quadrature_converged = dil.quadrature.converged;
  for (int m : m_grid) {
    const NormResult e = evaluator.norm_of_difference(f, truncate(fr, m));
    report.rows.push_back({r, m, e.full_norm});
    report.quadrature_converged = report.quadrature_converged && e.quadrature.converged;
  }
  const double last = report.rows.back().error;
  report.verdict =
      last <= (1 + options.approx_slack) * report.dilatation_error ? Verdict::converged : Verdict::not_converged;
  return report;
}

bool SuiteSummary::all_converged() const {
  for (const auto& cell : cells)
    if (cell.report.verdict != Verdict::converged) return false;
  return true;
}

std::vector<std::pair<std::string, PolyFunctiond>> suite_functions() {
  const auto e = exp_series<double>(30);
  return {
      {"exp", PolyFunctiond(std::vector{e})},
      {"zbar+zbar^2/2", from_monomials<double>({{{1, 0}, 1.0}, {{2, 0}, 0.5}}, 3)},
      {"zbar*exp", zbar_power_times(1, e)},
  };
}

std::vector<SuiteCase> theorem_matrix() {
  const std::vector<WeightSpec> weights = {
      weight::Uniform{},
      weight::ExpAbsPow{1, 2},
      weight::ExpRePow{1, 1},
      weight::ExpAbs{},
      weight::AngularPoly{1, std::nullopt},
      weight::Product{weight::PowerLaw{1}, weight::AngularPoly{1, std::nullopt}},
  };
  const std::vector<std::pair<SpaceKind, double>> spaces = {
      {SpaceKind::dirichlet, 1}, {SpaceKind::dirichlet, 2}, {SpaceKind::dirichlet, 3}, {SpaceKind::besov, 2},
      {SpaceKind::besov, 3},     {SpaceKind::besov, 4},     {SpaceKind::bergman, 2},
  };
  const auto functions = suite_functions();

  std::vector<SuiteCase> out;
  for (Domain domain : {Domain::unit_disk, Domain::upper_half_plane}) {
    for (const auto& [kind, p] : spaces) {
      for (const auto& w : weights) {
        SpaceSpec spec;
        spec.domain = domain;
        spec.kind = kind;
        spec.p = p;
        spec.weight = w;
        if (domain == Domain::upper_half_plane) spec.half_plane = HalfPlaneParams{1, 1};
        for (const auto& [name, f] : functions) out.push_back({name, f, spec});
      }
    }
  }
  return out;
}

SuiteSummary run_theorem_suite(const std::vector<SuiteCase>& family, const ExperimentOptions& options,
                               const std::vector<double>& r_grid) {
  SuiteSummary summary;
  std::map<std::string, std::optional<ConditionWitness>> conditions;
  std::optional<NormEvaluator> evaluator;
  std::string evaluator_key;
  for (const auto& input : family) {
    // Consecutive cases usually share a space; reuse its precomputed density.
    const std::string key = input.spec.describe();
    if (!evaluator || key != evaluator_key) {
      evaluator.emplace(input.spec, options.quadrature);
      evaluator_key = key;
    }
    const std::string condition_key = std::string(to_string(input.spec.domain)) + "|" + describe(input.spec.weight);
    auto it = conditions.find(condition_key);
    if (it == conditions.end())
      it = conditions.emplace(condition_key, find_min_k(input.spec.weight, 3, 0.5, input.spec.domain)).first;

    SuiteCell cell;
    cell.id = std::string(to_string(input.spec.domain)) + "/" + to_string(input.spec.kind) +
              "/p=" + fmt_p(input.spec.p) + "/" + describe(input.spec.weight) + "/" + input.function_name;
    cell.input = input;
    cell.report = convergence_with(*evaluator, input.function, r_grid, options, input.function_name);
    cell.condition = it->second;
    summary.cells.push_back(std::move(cell));
  }
  return summary;
}

}  // namespace polyanalytic
