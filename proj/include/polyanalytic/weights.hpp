#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "polyanalytic/domain.hpp"

namespace polyanalytic {

namespace weight {

/// w = 1
struct Uniform {};

/// w(z) = exp(-beta |z|^n)
struct ExpAbsPow {
  double beta = 1;
  int n = 2;
};

/// w(z) = exp(-beta |Re z|^n)
struct ExpRePow {
  double beta = 1;
  int n = 1;
};

/// w(z) = exp(|z|)
struct ExpAbs {};

/// w(s e^{i theta}) = (theta_max^2 - theta^2)^alpha, theta in [0, theta_max).
/// theta_max defaults to 2 pi on the disk and pi on the half-plane.
struct AngularPoly {
  double alpha = 1;
  std::optional<double> theta_max;
};

/// omega(s) = (1 - s)^gamma on the disk, s^gamma on the half-plane.
struct PowerLaw {
  double gamma = 1;
};

using RadialProfile = std::variant<PowerLaw, ExpAbsPow>;
using AngularProfile = std::variant<Uniform, AngularPoly>;

/// w(s e^{i theta}) = omega(s) v(theta)
struct Product {
  RadialProfile radial = PowerLaw{};
  AngularProfile angular = Uniform{};
};

}  // namespace weight

using WeightSpec = std::variant<weight::Uniform, weight::ExpAbsPow, weight::ExpRePow, weight::ExpAbs,
                                weight::AngularPoly, weight::Product>;

/// Throws std::invalid_argument on out-of-range catalog parameters.
void validate(const WeightSpec& w);

/// Short stable tag with parameters, e.g. "exp-abs-pow(beta=1,n=2)".
std::string describe(const WeightSpec& w);

/// Depends on arg(z) only.
bool is_angular(const WeightSpec& w);

/// Upper end of the angular range for angular profiles on the given domain.
double theta_max(const weight::AngularPoly& a, Domain domain);

/// arg(z) reduced to [0, 2 pi).
double reduced_argument(std::complex<double> z);

/// log w(z). Rejects z outside the open domain and angles outside
/// [0, theta_max) with std::domain_error.
double log_weight(const WeightSpec& w, std::complex<double> z, Domain domain);

double eval_weight(const WeightSpec& w, std::complex<double> z, Domain domain);

/// Certificate for r^k w(z/r) <= C w(z), |z| < r, r0 <= r < 1, on a grid.
struct ConditionWitness {
  int k = 0;
  double C = 0;
  double r0 = 0;
  long grid_size = 0;
  /// Grid point where the supremum was attained.
  std::complex<double> argmax_z;
  double argmax_r = 0;
};

struct ConditionGrid {
  int n_r = 64;
  int n_z = 4096;
  double divergence_cap = 1e6;
};

/// Outcome of a grid check; `witness` carries the grid supremum either way.
struct ConditionCheck {
  bool satisfied = false;
  ConditionWitness witness;
};

/// Evaluates r^k w(z/r) / w(z) on n_r values of r in [r0, 1) times a
/// stratified polar sample of n_z points with |z| < r (upper half only on
/// the half-plane). Fails when the ratio exceeds grid.divergence_cap.
ConditionCheck check_condition(const WeightSpec& w, int k, double r0, Domain domain = Domain::unit_disk,
                               const ConditionGrid& grid = {});

/// Smallest k in [0, k_max] whose check succeeds.
std::optional<ConditionWitness> find_min_k(const WeightSpec& w, int k_max, double r0,
                                           Domain domain = Domain::unit_disk, const ConditionGrid& grid = {});

}  // namespace polyanalytic
