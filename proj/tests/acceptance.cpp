// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "oracles.hpp"
#include "polyanalytic/experiments.hpp"
#include "test_corpus.hpp"

using namespace polyanalytic;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<WeightSpec> catalog() {
  using namespace weight;
  return {Uniform{}, ExpAbsPow{1, 2}, ExpRePow{1, 1}, ExpAbs{}, AngularPoly{1, std::nullopt},
          Product{PowerLaw{1}, AngularPoly{1, std::nullopt}}};
}

SpaceSpec make_spec(Domain d, SpaceKind kind, double p, const WeightSpec& w) {
  SpaceSpec s{d, kind, p, w, std::nullopt};
  if (d == Domain::upper_half_plane) s.half_plane = HalfPlaneParams{1, 1};
  return s;
}

void quadrature_fixtures() {
  const QuadratureOptions q;
  const auto disk = disk_grid<double>(q.n_radial, q.n_angular);
  const double e_area = oracle::rel_err(integrate<double>(disk, [](cd) { return 1.0; }), pi);
  const double e_moment = oracle::rel_err(integrate<double>(disk, [](cd z) { return std::norm(z); }), pi / 2);
  // The square-root boundary singularity limits Gauss-Legendre to algebraic
  // convergence; the default tolerance drives the refinement.
  const auto refined = refine_until<double>([](cd z) { return std::sqrt(1 - std::norm(z)); },
                                            [&](int l) { return disk_grid<double>(q.n_radial << l, q.n_angular << l); },
                                            q.rel_tol, 6);
  const double e_root = oracle::rel_err(refined.value, 2 * pi / 3);
  const auto half = halfplane_grid<double>(auto_halfplane_radius(1), q.n_radial, q.n_angular);
  const double e_gauss =
      oracle::rel_err(integrate<double>(half, [](cd z) { return std::exp(-std::norm(z)); }), pi / 2);
  const bool ok = e_area <= 1e-10 && e_moment <= 1e-10 && e_root <= 1e-10 && e_gauss <= 1e-10;
  report(1, "quadrature fixtures", ok,
         fmt("rel err area %.2e, |z|^2 %.2e, ", e_area, e_moment) +
             fmt("sqrt(1-|z|^2) %.2e (refinement level %g), ", e_root, refined.level) +
             fmt("half-plane gaussian %.2e", e_gauss));
}

void closed_form_dilatation() {
  const auto f = from_monomials<double>({{{1, 1}, 1.0}}, 2);
  const auto r = dilatation_convergence(f, make_spec(Domain::unit_disk, SpaceKind::besov, 2, weight::Uniform{}),
                                        {0.5, 0.9, 0.99});
  double worst = 0, worst_oracle = 0;
  for (const auto& row : r.rows) {
    const double closed = (1 - row.r * row.r) * std::sqrt(pi);
    const double c = 1 - row.r * row.r;
    const double simpson = std::sqrt(oracle::disk_simpson([c](cd z) { return 2 * c * c * std::norm(z); }, 400, 400));
    worst = std::max(worst, oracle::rel_err(row.err_fullnorm, closed));
    worst_oracle = std::max(worst_oracle, oracle::rel_err(simpson, closed));
  }
  report(2, "closed-form dilatation error", worst <= 1e-8 && worst_oracle <= 1e-8,
         fmt("max rel err vs (1-r^2)sqrt(pi) %.2e; simpson oracle vs closed form %.2e", worst, worst_oracle));
}

void p2_collapse() {
  double worst = 0;
  int count = 0;
  for (Domain d : {Domain::unit_disk, Domain::upper_half_plane}) {
    for (const auto& w : catalog()) {
      const NormEvaluator besov(make_spec(d, SpaceKind::besov, 2, w));
      const NormEvaluator dirichlet(make_spec(d, SpaceKind::dirichlet, 2, w));
      for (const auto& [name, f] : test_corpus::functions()) {
        const double a = besov.norm(f).full_norm, b = dirichlet.norm(f).full_norm;
        worst = std::max(worst, b == 0 ? std::abs(a) : std::abs(a - b) / b);
        ++count;
      }
    }
  }
  report(3, "besov p=2 equals dirichlet", worst <= 1e-12,
         fmt("%g comparisons, max rel diff %.2e", count, worst));
}

void weight_conditions() {
  const auto a = check_condition(weight::ExpAbsPow{1, 2}, 0, 0.5);
  const auto b = check_condition(weight::ExpRePow{1, 1}, 0, 0.5);
  const auto c = check_condition(weight::ExpAbs{}, 1, 0.5);
  const bool ok = a.satisfied && b.satisfied && c.satisfied && a.witness.C <= 1 + 1e-9 && b.witness.C <= 1 + 1e-9 &&
                  c.witness.C <= 1 + 1e-6;
  report(4, "weight growth condition", ok,
         fmt("C(exp-abs-pow,k=0) = %.12f, C(exp-re-pow,k=0) = %.12f, C(exp-abs,k=1) = %.12f", a.witness.C,
             b.witness.C, c.witness.C));
}

void theorem_matrix_run() {
  const auto summary = run_theorem_suite(theorem_matrix());
  std::size_t ok = 0;
  std::string first_failure;
  for (const auto& cell : summary.cells) {
    if (cell.report.verdict == Verdict::converged)
      ++ok;
    else if (first_failure.empty())
      first_failure = "; first failure " + cell.id;
  }
  report(5, "theorem matrix", ok == summary.cells.size() && !summary.cells.empty(),
         fmt("%g/%g cells converged", static_cast<double>(ok), static_cast<double>(summary.cells.size())) +
             first_failure);
}

void limsup_certificates() {
  const auto grid = default_r_grid();
  std::vector<std::pair<PolyFunctiond, SpaceSpec>> fixtures = {
      {from_monomials<double>({{{0, 1}, 1.0}}, 1), make_spec(Domain::unit_disk, SpaceKind::besov, 2, weight::Uniform{})},
      {PolyFunctiond::constant(1.0), make_spec(Domain::unit_disk, SpaceKind::besov, 2, weight::Uniform{})},
      {from_monomials<double>({{{1, 2}, 1.0}}, 2), make_spec(Domain::unit_disk, SpaceKind::besov, 4, weight::Uniform{})},
  };
  for (Domain d : {Domain::unit_disk, Domain::upper_half_plane})
    for (const auto& [kind, p] : {std::pair{SpaceKind::dirichlet, 2.0}, std::pair{SpaceKind::besov, 2.0},
                                  std::pair{SpaceKind::besov, 3.0}, std::pair{SpaceKind::besov, 4.0}})
      for (const auto& w : catalog())
        for (const auto& [name, f] : suite_functions()) fixtures.push_back({f, make_spec(d, kind, p, w)});

  int certified = 0;
  double worst_ratio = 0;
  std::string first_failure;
  for (const auto& [f, spec] : fixtures) {
    const auto r = limsup_check(f, spec, grid);
    certified += r.certified;
    for (const auto& row : r.rows) {
      if (r.rhs_dz > 0) worst_ratio = std::max(worst_ratio, row.lhs_dz / r.rhs_dz);
      if (r.rhs_dzbar > 0) worst_ratio = std::max(worst_ratio, row.lhs_dzbar / r.rhs_dzbar);
    }
    if (!r.certified && first_failure.empty()) first_failure = "; first failure " + spec.describe();
  }
  const auto z = limsup_check(fixtures[0].first, fixtures[0].second, grid);
  double z_err = 0;
  for (const auto& row : z.rows) z_err = std::max(z_err, oracle::rel_err(row.lhs_dz, row.r * row.r * pi));
  const bool ok = certified == static_cast<int>(fixtures.size()) && z_err <= 1e-8;
  report(6, "limsup certificates", ok,
         fmt("%g/%g fixtures certified, max LHS/RHS %.6f, ", certified, static_cast<double>(fixtures.size()),
             worst_ratio) +
             fmt("f=z: max rel err vs r^2 pi %.2e", z_err) + first_failure);
}

void exact_calculus() {
  bool annihilated = true;
  for (const auto& [name, f] : test_corpus::functions()) {
    PolyFunctiond g = f;
    for (int i = 0; i < f.q(); ++i) g = d_zbar(g);
    annihilated = annihilated && (g.coeffs().array() == cd(0)).all();
  }
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  int count = 0;
  for (const auto& [name, f] : test_corpus::functions()) {
    const auto df = d_z(f);
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
      const auto dfr = d_z(dilate(f, DilationFactor<double>(r)));
      for (int i = 0; i < 100; ++i) {
        const cd z = std::polar(0.999 * std::sqrt(u(rng)), 2 * pi * u(rng));
        const cd expected = r * df(r * z);
        worst = std::max(worst, std::abs(dfr(z) - expected) / std::max(1.0, std::abs(expected)));
        ++count;
      }
    }
  }
  report(7, "exact calculus", annihilated && worst <= 1e-12,
         std::string(annihilated ? "q-fold d_zbar is zero for all corpus functions" : "nonzero q-fold d_zbar") +
             fmt("; dilated derivative identity at %g points, max rel err %.2e", count, worst));
}

void polynomial_approximation() {
  const auto f = zbar_power_times(1, exp_series<double>(30));
  const auto r = poly_approx(f, make_spec(Domain::unit_disk, SpaceKind::besov, 2, weight::Uniform{}), 0.99,
                             {2, 5, 10, 20});
  bool monotone = true;
  for (std::size_t i = 1; i < r.rows.size(); ++i) monotone = monotone && r.rows[i].error <= r.rows[i - 1].error;
  const double ratio = r.rows.back().error / r.dilatation_error;
  report(8, "polynomial approximation", monotone && ratio <= 1.1,
         fmt("error(m=20) / ||f - f_r|| = %.6f, ", ratio) + (monotone ? "nonincreasing in m" : "NOT monotone"));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  quadrature_fixtures();
  closed_form_dilatation();
  p2_collapse();
  weight_conditions();
  theorem_matrix_run();
  limsup_certificates();
  exact_calculus();
  polynomial_approximation();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/8 criteria passed in %.1f s\n", 8 - failures, seconds);
  return failures == 0 ? 0 : 1;
}
