#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <type_traits>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "polyanalytic/domain.hpp"

namespace polyanalytic {

template <typename Scalar>
using RealArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using ComplexArray = Eigen::Array<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Gauss-Legendre rule on [-1, 1].
template <typename Scalar>
struct GaussLegendreRule {
  RealArray<Scalar> nodes;
  RealArray<Scalar> weights;
};

/// Nodes by Newton iteration on P_n from the Tricomi initial guess; the
/// rule is symmetric so only half the roots are iterated.
template <typename Scalar>
GaussLegendreRule<Scalar> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule<Scalar> rule{RealArray<Scalar>(n), RealArray<Scalar>(n)};
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  // Returns (P_n(x), P_n'(x)) by the three-term recurrence.
  const auto legendre = [n](Scalar x) {
    Scalar p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1))};
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Scalar x = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const Scalar dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 2 * eps) break;
    }
    const Scalar dp = legendre(x).second;
    const Scalar w = Scalar(2) / ((Scalar(1) - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(n - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(n - 1 - i) = w;
  }
  if (n % 2 == 1) rule.nodes(n / 2) = 0;
  return rule;
}

/// Nodes and positive weights realizing dA on a (possibly truncated) domain.
template <typename Scalar>
struct QuadratureGrid {
  ComplexArray<Scalar> nodes;
  RealArray<Scalar> weights;
  Domain domain = Domain::unit_disk;
  int n_radial = 0;
  int n_angular = 0;
  /// Outer radius of the covered region: 1 on the disk, R on the half-plane.
  Scalar radius = 1;

  Eigen::Index size() const { return nodes.size(); }
};

/// Polar product rule on the unit disk: Gauss-Legendre in s on (0, 1) with
/// the Jacobian s folded into the weight, midpoint rule in theta.
template <typename Scalar>
QuadratureGrid<Scalar> disk_grid(int n_radial, int n_angular) {
  if (n_radial < 1 || n_angular < 1) throw std::invalid_argument("disk_grid: resolutions must be >= 1");
  const auto gl = gauss_legendre<Scalar>(n_radial);
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  const Scalar dtheta = two_pi / Scalar(n_angular);
  QuadratureGrid<Scalar> grid;
  grid.domain = Domain::unit_disk;
  grid.n_radial = n_radial;
  grid.n_angular = n_angular;
  grid.nodes.resize(Eigen::Index(n_radial) * n_angular);
  grid.weights.resize(grid.nodes.size());
  Eigen::Index idx = 0;
  for (int i = 0; i < n_radial; ++i) {
    const Scalar s = (gl.nodes(i) + Scalar(1)) / Scalar(2);
    const Scalar ws = gl.weights(i) / Scalar(2) * s * dtheta;
    for (int l = 0; l < n_angular; ++l, ++idx) {
      const Scalar theta = dtheta * (Scalar(l) + Scalar(0.5));
      grid.nodes(idx) = std::polar(s, theta);
      grid.weights(idx) = ws;
    }
  }
  return grid;
}

/// Polar product rule on the half-disk {|z| < R, Im z > 0}: Gauss-Legendre
/// in s on (0, R) and in theta on (0, pi). Integrands must decay so that the
/// region |z| > R is negligible.
template <typename Scalar>
QuadratureGrid<Scalar> halfplane_grid(Scalar R, int n_radial, int n_angular) {
  if (!(R > 0)) throw std::invalid_argument("halfplane_grid: R must be > 0");
  if (n_radial < 1 || n_angular < 1) throw std::invalid_argument("halfplane_grid: resolutions must be >= 1");
  const auto gl_s = gauss_legendre<Scalar>(n_radial);
  const auto gl_t = gauss_legendre<Scalar>(n_angular);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  QuadratureGrid<Scalar> grid;
  grid.domain = Domain::upper_half_plane;
  grid.n_radial = n_radial;
  grid.n_angular = n_angular;
  grid.radius = R;
  grid.nodes.resize(Eigen::Index(n_radial) * n_angular);
  grid.weights.resize(grid.nodes.size());
  Eigen::Index idx = 0;
  for (int i = 0; i < n_radial; ++i) {
    const Scalar s = R * (gl_s.nodes(i) + Scalar(1)) / Scalar(2);
    const Scalar ws = gl_s.weights(i) * R / Scalar(2) * s;
    for (int l = 0; l < n_angular; ++l, ++idx) {
      const Scalar theta = pi * (gl_t.nodes(l) + Scalar(1)) / Scalar(2);
      grid.nodes(idx) = std::polar(s, theta);
      grid.weights(idx) = ws * gl_t.weights(l) * pi / Scalar(2);
    }
  }
  return grid;
}

namespace detail {
template <typename Scalar>
Scalar pairwise_sum(const Scalar* x, Eigen::Index n) {
  if (n <= 16) {
    Scalar acc = 0;
    for (Eigen::Index i = 0; i < n; ++i) acc += x[i];
    return acc;
  }
  const Eigen::Index half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}
}  // namespace detail

/// sum_i values_i * weight_i with pairwise summation, so the result does not
/// depend on how the caller produced the values.
template <typename Scalar>
Scalar integrate(const QuadratureGrid<Scalar>& grid, const RealArray<Scalar>& values) {
  if (values.size() != grid.size()) throw std::invalid_argument("integrate: value count does not match grid");
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values(i))) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrate: non-finite integrand " << values(i) << " at node " << i << " (z = " << grid.nodes(i).real()
          << (grid.nodes(i).imag() < 0 ? " - " : " + ") << std::abs(grid.nodes(i).imag()) << "i)";
      throw std::domain_error(msg.str());
    }
  }
  const RealArray<Scalar> terms = values * grid.weights;
  return detail::pairwise_sum(terms.data(), terms.size());
}

/// Integrates a pointwise function g(z) -> Scalar.
template <typename Scalar, typename Fn>
  requires std::is_invocable_r_v<Scalar, Fn, std::complex<Scalar>>
Scalar integrate(const QuadratureGrid<Scalar>& grid, Fn&& g) {
  RealArray<Scalar> values(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) values(i) = static_cast<Scalar>(g(grid.nodes(i)));
  return integrate(grid, values);
}

template <typename Scalar>
struct RefinementResult {
  Scalar value = 0;
  /// |v_l - v_{l-1}| / |v_l| at the last level computed; +inf if never refined.
  Scalar rel_change = std::numeric_limits<Scalar>::infinity();
  int level = 0;
  bool converged = false;
};

/// Evaluates value_at(level) for level = 0, 1, ... until successive values
/// agree to rel_tol or max_level is reached.
template <typename Scalar, typename LevelFn>
RefinementResult<Scalar> refine_levels(LevelFn&& value_at, Scalar rel_tol, int max_level) {
  if (!(rel_tol > 0)) throw std::invalid_argument("refine_until: rel_tol must be > 0");
  RefinementResult<Scalar> out;
  out.value = value_at(0);
  for (int level = 1; level <= max_level; ++level) {
    const Scalar next = value_at(level);
    const Scalar diff = std::abs(next - out.value);
    const Scalar scale = std::abs(next);
    out.rel_change = diff == 0 ? Scalar(0) : (scale > 0 ? diff / scale : std::numeric_limits<Scalar>::infinity());
    out.value = next;
    out.level = level;
    if (out.rel_change < rel_tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

/// Doubles both resolutions of grid_family(level) until the integral of g
/// settles. grid_family maps a level to a QuadratureGrid.
template <typename Scalar, typename Fn, typename Family>
RefinementResult<Scalar> refine_until(Fn&& g, Family&& grid_family, Scalar rel_tol, int max_level) {
  return refine_levels<Scalar>([&](int level) { return integrate<Scalar>(grid_family(level), g); }, rel_tol,
                               max_level);
}

using QuadratureGridd = QuadratureGrid<double>;

}  // namespace polyanalytic
