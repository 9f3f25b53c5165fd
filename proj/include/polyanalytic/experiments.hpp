#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyanalytic/norms.hpp"

namespace polyanalytic {

enum class Verdict { converged, not_converged };

std::string to_string(Verdict v);

struct ExperimentOptions {
  QuadratureOptions quadrature;
  /// Convergence verdict: final error <= threshold * ||f||.
  double threshold = 0.02;
  /// Limsup certificate: LHS(r) <= RHS * (1 + limsup_tolerance).
  double limsup_tolerance = 1e-3;
  /// Approximation verdict: error at max m <= (1 + approx_slack) * ||f - f_r||.
  double approx_slack = 0.1;
};

/// Default dilation grid {0.5, 0.9, 0.99, 0.999}.
std::vector<double> default_r_grid();

struct ConvergenceRow {
  double r = 0;
  double err_seminorm = 0;
  double err_fullnorm = 0;
  double point_term = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  SpaceSpec spec;
  std::string function;
  double norm_f = 0;
  double threshold = 0;
  Verdict verdict = Verdict::not_converged;
  /// Every norm evaluation met the quadrature refinement tolerance.
  bool quadrature_converged = true;
  bool truncated = false;
};

/// ||f_r - f|| over an increasing grid of r in (0, 1).
ConvergenceReport dilatation_convergence(const PolyFunctiond& f, const SpaceSpec& spec,
                                         const std::vector<double>& r_grid, const ExperimentOptions& options = {},
                                         std::string function_name = "f");

struct LimsupRow {
  double r = 0;
  double lhs_dz = 0;
  double lhs_dzbar = 0;
};

/// Dilated derivative integrals against the fixed undilated ones:
/// LHS(r) = int |d f_r|^p dmu, RHS = int |d f|^p dmu for d in {d_z, d_zbar}.
struct LimsupReport {
  std::vector<LimsupRow> rows;
  double rhs_dz = 0;
  double rhs_dzbar = 0;
  /// max over r and both parts of LHS - RHS.
  double margin = 0;
  double tolerance = 0;
  bool certified = false;
  bool quadrature_converged = true;
};

LimsupReport limsup_check(const PolyFunctiond& f, const SpaceSpec& spec, const std::vector<double>& r_grid,
                          const ExperimentOptions& options = {});

struct ApproxRow {
  double r = 0;
  int m = 0;
  double error = 0;
};

struct ApproxReport {
  std::vector<ApproxRow> rows;
  SpaceSpec spec;
  double dilatation_error = 0;
  Verdict verdict = Verdict::not_converged;
  bool quadrature_converged = true;
};

/// ||f - truncate(f_r, m)|| for each m.
ApproxReport poly_approx(const PolyFunctiond& f, const SpaceSpec& spec, double r, const std::vector<int>& m_grid,
                         const ExperimentOptions& options = {});

/// One cell of the theorem matrix.
struct SuiteCase {
  std::string function_name;
  PolyFunctiond function;
  SpaceSpec spec;
};

struct SuiteCell {
  std::string id;
  SuiteCase input;
  ConvergenceReport report;
  /// Smallest k admitting the weight growth condition on this domain (r0 = 0.5).
  std::optional<ConditionWitness> condition;
};

struct SuiteSummary {
  std::vector<SuiteCell> cells;
  bool all_converged() const;
};

/// The test functions used by the theorem matrix: analytic exp(z), the
/// antianalytic conj(z) + conj(z)^2 / 2, and the mixed conj(z) exp(z);
/// transcendental parts are degree-30 Taylor polynomials.
std::vector<std::pair<std::string, PolyFunctiond>> suite_functions();

/// {disk, half-plane} x {Dirichlet p in {1,2,3}, Besov p in {2,3,4},
/// Bergman p = 2} x the weight catalog x suite_functions().
std::vector<SuiteCase> theorem_matrix();

SuiteSummary run_theorem_suite(const std::vector<SuiteCase>& family, const ExperimentOptions& options = {},
                               const std::vector<double>& r_grid = default_r_grid());

}  // namespace polyanalytic
