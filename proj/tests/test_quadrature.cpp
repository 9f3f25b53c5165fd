#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "polyanalytic/quadrature.hpp"

using namespace polyanalytic;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double one(cd) { return 1.0; }
double abs2(cd z) { return std::norm(z); }
double half_root(cd z) { return std::sqrt(1 - std::norm(z)); }

auto disk_family(int n_r = 128, int n_t = 256) {
  return [=](int level) { return disk_grid<double>(n_r << level, n_t << level); };
}

}  // namespace

TEST_CASE("disk grid fixtures") {
  const auto g = disk_grid<double>(64, 128);
  CHECK(oracle::rel_err(integrate<double>(g, one), pi) <= 1e-12);
  CHECK(oracle::rel_err(integrate<double>(g, abs2), pi / 2) <= 1e-12);
  CHECK(oracle::rel_err(integrate<double>(g, [](cd z) { return std::pow(1 - std::norm(z), 0.0); }), pi) <= 1e-12);
  CHECK(integrate<double>(g, [](cd) { return 0.0; }) == 0.0);
  CHECK(oracle::rel_err(g.weights.sum(), pi) <= 1e-12);
}

TEST_CASE("half-plane grid fixtures") {
  const auto g = halfplane_grid<double>(8, 256, 128);
  CHECK(oracle::rel_err(integrate<double>(g, [](cd z) { return std::exp(-std::norm(z)); }), pi / 2) <= 1e-10);
  CHECK(oracle::rel_err(integrate<double>(halfplane_grid<double>(1, 64, 64), one), pi / 2) <= 1e-8);
  CHECK_THROWS_AS(halfplane_grid<double>(0.0, 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(halfplane_grid<double>(-1.0, 8, 8), std::invalid_argument);
}

TEST_CASE("half-plane first moment agrees with Monte Carlo") {
  const auto g = halfplane_grid<double>(8, 256, 128);
  const double q = integrate<double>(g, [](cd z) { return z.imag() * std::exp(-std::norm(z)); });
  const auto mc = oracle::halfplane_gaussian_mc([](cd z) { return z.imag(); }, 10'000'000, 1234);
  CAPTURE(q);
  CAPTURE(mc.value);
  CHECK(std::abs(q - mc.value) <= 3 * mc.std_error);
}

TEST_CASE("nodes are interior and weights positive") {
  const auto d = disk_grid<double>(32, 48);
  CHECK((d.weights > 0).all());
  CHECK((d.nodes.abs() < 1).all());
  const auto h = halfplane_grid<double>(3, 32, 48);
  CHECK((h.weights > 0).all());
  CHECK((h.nodes.imag() > 0).all());
  CHECK((h.nodes.abs() < 3).all());
}

TEST_CASE("Gauss-Legendre matches Golub-Welsch") {
  for (int n : {1, 2, 5, 16, 64, 128}) {
    CAPTURE(n);
    const auto rule = gauss_legendre<double>(n);
    auto [x, w] = oracle::golub_welsch(n);
    CHECK((rule.nodes.matrix() - x).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((rule.weights.matrix() - w).cwiseAbs().maxCoeff() <= 1e-13);
  }
  CHECK_THROWS_AS(gauss_legendre<double>(0), std::invalid_argument);
}

TEST_CASE("property: radial exactness") {
  for (int n_r : {4, 16, 64}) {
    const auto g = disk_grid<double>(n_r, 8);
    for (int m = 0; m <= n_r - 1; ++m) {
      CAPTURE(n_r);
      CAPTURE(m);
      const double exact = 2 * pi / (2 * m + 2);
      const double v = integrate<double>(g, [m](cd z) { return std::pow(std::abs(z), 2 * m); });
      CHECK(oracle::rel_err(v, exact) <= 1e-13);
    }
  }
}

TEST_CASE("property: angular harmonics vanish") {
  const int n_t = 64;
  const auto g = disk_grid<double>(8, n_t);
  for (int m = 1; m < n_t; ++m) {
    CAPTURE(m);
    const double re = integrate<double>(g, [m](cd z) { return std::cos(m * std::arg(z)); });
    const double im = integrate<double>(g, [m](cd z) { return std::sin(m * std::arg(z)); });
    CHECK(std::abs(re) < 1e-13);
    CHECK(std::abs(im) < 1e-13);
  }
}

TEST_CASE("property: refinement error is monotone from level 2") {
  const std::pair<double (*)(cd), double> fixtures[] = {{one, pi}, {abs2, pi / 2}, {half_root, 2 * pi / 3}};
  for (const auto& [g, exact] : fixtures) {
    double prev = std::numeric_limits<double>::infinity();
    for (int level = 0; level <= 5; ++level) {
      const double err = std::abs(integrate<double>(disk_grid<double>(8 << level, 16 << level), g) - exact);
      CAPTURE(level);
      if (level >= 2) CHECK(err <= prev + 4 * std::numeric_limits<double>::epsilon() * exact);
      prev = err;
    }
  }
}

TEST_CASE("non-finite integrand names the node") {
  const auto g = disk_grid<double>(4, 4);
  try {
    integrate<double>(g, [](cd z) { return z.real() > 0 && z.imag() > 0 ? std::nan("") : 1.0; });
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
  RealArray<double> short_values(3);
  CHECK_THROWS_AS(integrate(g, short_values), std::invalid_argument);
}

TEST_CASE("refine_until") {
  const auto a = refine_until<double>(one, disk_family(), 1e-10, 3);
  CHECK(a.converged);
  CHECK(a.level == 1);
  CHECK(oracle::rel_err(a.value, pi) <= 1e-12);

  const auto b = refine_until<double>(half_root, disk_family(), 1e-8, 6);
  CHECK(b.converged);
  CHECK(oracle::rel_err(b.value, 2 * pi / 3) <= 1e-8);

  const auto c = refine_until<double>([](cd z) { return std::norm(std::conj(z) * z * z); }, disk_family(), 1e-10, 3);
  CHECK(c.converged);
  CHECK(oracle::rel_err(c.value, pi / 4) <= 1e-12);

  const auto flagged = refine_until<double>(half_root, disk_family(8, 16), 1e-14, 1);
  CHECK_FALSE(flagged.converged);
  CHECK(flagged.level == 1);
  CHECK(flagged.rel_change > 1e-14);

  CHECK_THROWS_AS(refine_until<double>(one, disk_family(), 0.0, 1), std::invalid_argument);
}

TEST_CASE("simpson oracle agrees with closed forms") {
  CHECK(oracle::rel_err(oracle::disk_simpson(abs2, 400, 400), pi / 2) <= 1e-10);
}
