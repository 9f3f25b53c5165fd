#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "polyanalytic/domain.hpp"
#include "polyanalytic/poly_function.hpp"
#include "polyanalytic/quadrature.hpp"
#include "polyanalytic/weights.hpp"

namespace polyanalytic {

enum class SpaceKind { bergman, dirichlet, besov };

std::string to_string(SpaceKind kind);

/// Parameters of the half-plane measure Im(z)^alpha exp(-beta |z|^2) dA.
struct HalfPlaneParams {
  double alpha = 0;
  double beta = 1;
};

struct SpaceSpec {
  Domain domain = Domain::unit_disk;
  SpaceKind kind = SpaceKind::dirichlet;
  double p = 2;
  WeightSpec weight = weight::Uniform{};
  /// Required on the half-plane, absent on the disk.
  std::optional<HalfPlaneParams> half_plane;

  /// 0 on the disk, i on the half-plane.
  std::complex<double> base_point() const;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  std::string describe() const;
};

struct QuadratureOptions {
  int n_radial = 128;
  int n_angular = 256;
  /// Half-plane truncation radius; automatic when beta > 0.
  std::optional<double> radius;
  double rel_tol = 1e-9;
  /// Number of resolution doublings allowed when checking convergence.
  int max_level = 1;
};

/// Default half-plane radius: max(8, sqrt(40 / beta)).
double auto_halfplane_radius(double beta);

struct QuadratureStatus {
  bool converged = false;
  double rel_change = 0;
  int level = 0;
  /// Half-plane integral cut at an explicit radius with no Gaussian decay.
  bool truncated = false;
  double radius = 1;
};

struct NormResult {
  double full_norm = 0;
  double seminorm = 0;
  /// |f(base_point)|^p; zero for Bergman.
  double point_term = 0;
  QuadratureStatus quadrature;
};

/// Precomputes the grids and the space density (weight times the space's
/// boundary/Gaussian factor) at every refinement level, then evaluates
/// norms of many functions in the same space.
class NormEvaluator {
 public:
  NormEvaluator(SpaceSpec spec, QuadratureOptions options = {});

  const SpaceSpec& spec() const { return spec_; }
  const QuadratureOptions& options() const { return options_; }

  NormResult norm(const PolyFunctiond& f) const;
  NormResult norm_of_difference(const PolyFunctiond& f, const PolyFunctiond& g) const;

  /// Refined integral of |g|^p against the space density.
  RefinementResult<double> integral_of_power(const PolyFunctiond& g) const;

  /// Refined integral of |d_z f|^p + |d_zbar f|^p (Dirichlet/Besov) or |f|^p
  /// (Bergman) against the space density.
  RefinementResult<double> seminorm_integral(const PolyFunctiond& f) const;

  int levels() const { return static_cast<int>(levels_.size()); }
  const QuadratureGridd& grid(int level) const { return levels_.at(level).grid; }

 private:
  struct Level {
    QuadratureGridd grid;
    RealArray<double> density;
  };

  RealArray<double> abs_pow(const PolyFunctiond& g, const Level& level) const;
  QuadratureStatus status(const RefinementResult<double>& r) const;

  SpaceSpec spec_;
  QuadratureOptions options_;
  std::vector<Level> levels_;
  bool truncated_ = false;
  double radius_ = 1;
};

NormResult bergman_norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options = {});
NormResult dirichlet_norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options = {});
NormResult besov_norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options = {});

/// Dispatches on spec.kind.
NormResult norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options = {});

/// The spec's norm of f - g; the point term uses (f - g)(base_point).
NormResult norm_of_difference(const PolyFunctiond& f, const PolyFunctiond& g, const SpaceSpec& spec,
                              const QuadratureOptions& options = {});

}  // namespace polyanalytic
