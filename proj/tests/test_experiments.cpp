#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "polyanalytic/experiments.hpp"

using namespace polyanalytic;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

SpaceSpec disk(SpaceKind kind, double p, WeightSpec w = weight::Uniform{}) {
  return SpaceSpec{Domain::unit_disk, kind, p, w, std::nullopt};
}

PolyFunctiond mono(int k, int j, int q, cd c = 1.0) { return from_monomials<double>({{{k, j}, c}}, q); }

PolyFunctiond zbar_exp() { return zbar_power_times(1, exp_series<double>(30)); }

}  // namespace

TEST_CASE("dilatation_convergence closed form") {
  const auto report = dilatation_convergence(mono(1, 1, 2), disk(SpaceKind::besov, 2), {0.5, 0.9, 0.99});
  REQUIRE(report.rows.size() == 3);
  const double expected[] = {1.329340388179137, 0.33676623167204794, 0.035271831633019814};
  for (std::size_t i = 0; i < 3; ++i) {
    const double r = report.rows[i].r;
    CHECK(oracle::rel_err(report.rows[i].err_fullnorm, (1 - r * r) * std::sqrt(pi)) <= 1e-8);
    CHECK(oracle::rel_err(report.rows[i].err_fullnorm, expected[i]) <= 1e-8);
  }
}

TEST_CASE("dilatation_convergence of constants") {
  for (const auto& spec : {disk(SpaceKind::dirichlet, 1), disk(SpaceKind::besov, 3, weight::ExpAbs{}),
                           SpaceSpec{Domain::upper_half_plane, SpaceKind::dirichlet, 2, weight::Uniform{},
                                     HalfPlaneParams{1, 1}}}) {
    const auto report = dilatation_convergence(PolyFunctiond::constant(cd(1, 2)), spec, default_r_grid());
    CHECK(report.verdict == Verdict::converged);
    for (const auto& row : report.rows) CHECK(row.err_fullnorm == 0);
  }
}

TEST_CASE("dilatation_convergence of the mixed exponential") {
  const auto spec = disk(SpaceKind::dirichlet, 2, weight::ExpAbsPow{1, 2});
  const auto report = dilatation_convergence(zbar_exp(), spec, {0.9, 0.99, 0.999});
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[1].err_fullnorm < report.rows[0].err_fullnorm);
  CHECK(report.rows[2].err_fullnorm < report.rows[1].err_fullnorm);
  CHECK(report.rows[2].err_fullnorm <= 0.02 * report.norm_f);
  CHECK(report.verdict == Verdict::converged);
}

TEST_CASE("dilatation_convergence rejects bad grids") {
  const auto spec = disk(SpaceKind::dirichlet, 2);
  CHECK_THROWS_AS(dilatation_convergence(mono(0, 1, 1), spec, {}), std::invalid_argument);
  CHECK_THROWS_AS(dilatation_convergence(mono(0, 1, 1), spec, {0.9, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(dilatation_convergence(mono(0, 1, 1), spec, {0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("property: convergence rows match an independent oracle") {
  // f = conj(z) z^2: d_z(f_r - f) = 2 (r^3 - 1) conj(z) z, d_zbar(f_r - f) = (r^3 - 1) z^2.
  const auto report = dilatation_convergence(mono(1, 2, 2), disk(SpaceKind::dirichlet, 2), default_r_grid());
  for (const auto& row : report.rows) {
    const double c = 1 - row.r * row.r * row.r;
    const double closed = c * std::sqrt(5 * pi / 3);
    const double simpson = std::sqrt(
        oracle::disk_simpson([c](cd z) { return c * c * 5 * std::norm(z) * std::norm(z); }, 400, 400));
    CHECK(oracle::rel_err(simpson, closed) <= 1e-10);
    CHECK(oracle::rel_err(row.err_fullnorm, closed) <= 1e-8);
  }
}

TEST_CASE("property: report rows decompose") {
  const SpaceSpec spec{Domain::upper_half_plane, SpaceKind::besov, 3, weight::ExpRePow{1, 1}, HalfPlaneParams{1, 1}};
  const auto report = dilatation_convergence(zbar_exp(), spec, default_r_grid());
  for (const auto& row : report.rows) {
    const double lhs = std::pow(row.err_fullnorm, 3);
    const double rhs = row.point_term + std::pow(row.err_seminorm, 3);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
    CHECK(row.err_fullnorm >= 0);
  }
}

TEST_CASE("limsup_check examples") {
  const auto a = limsup_check(mono(0, 1, 1), disk(SpaceKind::besov, 2), default_r_grid());
  CHECK(a.certified);
  CHECK(oracle::rel_err(a.rhs_dz, pi) <= 1e-12);
  for (const auto& row : a.rows) {
    CHECK(oracle::rel_err(row.lhs_dz, row.r * row.r * pi) <= 1e-8);
    CHECK(row.lhs_dzbar == 0);
  }

  const auto c = limsup_check(PolyFunctiond::constant(2.0), disk(SpaceKind::besov, 3), default_r_grid());
  CHECK(c.certified);
  CHECK(c.rhs_dz == 0);
  CHECK(c.margin == 0);

  const auto b = limsup_check(mono(1, 2, 2), disk(SpaceKind::besov, 4), default_r_grid());
  CHECK(b.certified);
  const auto& last = b.rows.back();
  CHECK(last.r == 0.999);
  CHECK(last.lhs_dz - b.rhs_dz <= 1e-3 * b.rhs_dz);
  CHECK(last.lhs_dzbar - b.rhs_dzbar <= 1e-3 * b.rhs_dzbar);

  CHECK_THROWS_AS(limsup_check(mono(0, 1, 1), disk(SpaceKind::bergman, 2), default_r_grid()), std::invalid_argument);
}

TEST_CASE("property: limsup certificates across weights") {
  const std::vector<WeightSpec> ws = {weight::Uniform{}, weight::ExpAbsPow{1, 2}, weight::ExpRePow{1, 1},
                                      weight::ExpAbs{}, weight::AngularPoly{1, std::nullopt}};
  for (const auto& w : ws) {
    for (double p : {2.0, 3.0}) {
      CAPTURE(describe(w));
      const auto report = limsup_check(zbar_exp(), disk(SpaceKind::besov, p, w), default_r_grid());
      for (const auto& row : report.rows) {
        CHECK(row.lhs_dz <= report.rhs_dz * (1 + 1e-3));
        CHECK(row.lhs_dzbar <= report.rhs_dzbar * (1 + 1e-3));
      }
    }
  }
}

TEST_CASE("property: dilated boundary factor is monotone in r") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = u(rng) * 0.5;
    const double p = 2 + 3 * u(rng);
    double prev = -1;
    for (double r = 0.5; r < 1; r += 0.01) {
      const double v = std::pow((r * r - t * t) / (r * r), p - 2);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("poly_approx examples") {
  const auto spec = disk(SpaceKind::besov, 2);
  const auto f = mono(1, 2, 2);
  const auto exact = poly_approx(f, spec, 0.99, {2, 3, 5});
  for (const auto& row : exact.rows) CHECK(row.error == exact.dilatation_error);
  CHECK(exact.verdict == Verdict::converged);

  const auto e = poly_approx(zbar_exp(), spec, 0.99, {2, 5, 10, 20});
  REQUIRE(e.rows.size() == 4);
  for (std::size_t i = 1; i < e.rows.size(); ++i) CHECK(e.rows[i].error < e.rows[i - 1].error);
  CHECK(e.rows.back().error <= 1.1 * e.dilatation_error);
  CHECK(e.verdict == Verdict::converged);

  const auto c = poly_approx(PolyFunctiond::constant(1.0), spec, 0.5, {0, 1});
  for (const auto& row : c.rows) CHECK(row.error == 0);

  CHECK_THROWS_AS(poly_approx(f, spec, 1.0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(poly_approx(f, spec, 0.5, {3, 2}), std::invalid_argument);
}

TEST_CASE("property: approximation error is nonincreasing in m") {
  // Radial disk measures keep the monomials orthogonal.
  const SpaceSpec specs[] = {disk(SpaceKind::dirichlet, 3, weight::ExpAbs{}), disk(SpaceKind::besov, 2),
                             disk(SpaceKind::bergman, 2, weight::ExpAbsPow{1, 2}),
                             disk(SpaceKind::besov, 4, weight::Product{weight::PowerLaw{1}, weight::Uniform{}})};
  for (const auto& spec : specs) {
    CAPTURE(spec.describe());
    const auto report = poly_approx(zbar_exp(), spec, 0.9, {0, 1, 2, 4, 8, 16, 31});
    for (std::size_t i = 1; i < report.rows.size(); ++i)
      CHECK(report.rows[i].error <= report.rows[i - 1].error + 1e-12);
  }
}

TEST_CASE("half-plane truncation error can overshoot") {
  const SpaceSpec spec{Domain::upper_half_plane, SpaceKind::bergman, 2, weight::Uniform{}, HalfPlaneParams{1, 1}};
  const auto report = poly_approx(zbar_exp(), spec, 0.9, {6, 8});
  CHECK(report.rows[0].error < report.rows[1].error);
  CHECK(report.rows[1].error <= report.dilatation_error);
}

TEST_CASE("run_theorem_suite") {
  CHECK(theorem_matrix().size() == 252);
  CHECK(run_theorem_suite({}).cells.empty());
  CHECK(run_theorem_suite({}).all_converged());

  const SuiteCase single{"zbar*z", mono(1, 1, 2), disk(SpaceKind::dirichlet, 2)};
  const auto summary = run_theorem_suite({single});
  REQUIRE(summary.cells.size() == 1);
  CHECK(summary.cells[0].id == "disk/dirichlet/p=2/uniform/zbar*z");
  CHECK(summary.cells[0].report.verdict == Verdict::converged);
  REQUIRE(summary.cells[0].condition);
  CHECK(summary.cells[0].condition->k == 0);
  CHECK(summary.all_converged());
}
