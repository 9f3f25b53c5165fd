#include "polyanalytic/norms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyanalytic {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::bergman:
      return "bergman";
    case SpaceKind::dirichlet:
      return "dirichlet";
    case SpaceKind::besov:
      return "besov";
  }
  return "unknown";
}

std::complex<double> SpaceSpec::base_point() const {
  return domain == Domain::unit_disk ? std::complex<double>(0, 0) : std::complex<double>(0, 1);
}

void SpaceSpec::validate() const {
  if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("p must be a positive finite number");
  if (kind == SpaceKind::besov && p < 2) throw std::invalid_argument("besov requires p >= 2");
  if (domain == Domain::unit_disk && half_plane)
    throw std::invalid_argument("alpha/beta apply to the half-plane only");
  if (domain == Domain::upper_half_plane) {
    if (!half_plane) throw std::invalid_argument("half-plane spaces require alpha and beta");
    if (!(half_plane->alpha >= 0)) throw std::invalid_argument("alpha must be >= 0");
    if (!(half_plane->beta >= 0)) throw std::invalid_argument("beta must be >= 0");
  }
  polyanalytic::validate(weight);
}

std::string SpaceSpec::describe() const {
  std::ostringstream os;
  os << to_string(domain) << '/' << to_string(kind) << "/p=" << p << '/' << polyanalytic::describe(weight);
  if (half_plane) os << "/alpha=" << half_plane->alpha << ",beta=" << half_plane->beta;
  return os.str();
}

double auto_halfplane_radius(double beta) {
  if (!(beta > 0)) throw std::invalid_argument("automatic truncation radius needs beta > 0");
  return std::max(8.0, std::sqrt(40.0 / beta));
}

NormEvaluator::NormEvaluator(SpaceSpec spec, QuadratureOptions options)
    : spec_(std::move(spec)), options_(options) {
  spec_.validate();
  if (options_.n_radial < 1 || options_.n_angular < 1)
    throw std::invalid_argument("quadrature resolutions must be >= 1");
  if (options_.max_level < 0) throw std::invalid_argument("max refinement level must be >= 0");
  if (!(options_.rel_tol > 0)) throw std::invalid_argument("quadrature rel_tol must be > 0");

  double extra_power = 0;  // exponent on Im(z) beyond alpha, or on (1 - |z|^2)
  if (spec_.kind == SpaceKind::besov) extra_power = spec_.p - 2;

  if (spec_.domain == Domain::upper_half_plane) {
    const double beta = spec_.half_plane->beta;
    if (options_.radius) {
      if (!(*options_.radius > 0)) throw std::invalid_argument("truncation radius must be > 0");
      radius_ = *options_.radius;
    } else if (beta > 0) {
      radius_ = auto_halfplane_radius(beta);
    } else {
      throw std::invalid_argument("half-plane with beta = 0 requires an explicit truncation radius (--quad-R)");
    }
    truncated_ = beta == 0;
  }

  for (int level = 0; level <= options_.max_level; ++level) {
    const int nr = options_.n_radial << level;
    const int nt = options_.n_angular << level;
    Level lv{spec_.domain == Domain::unit_disk ? disk_grid<double>(nr, nt) : halfplane_grid<double>(radius_, nr, nt),
             {}};
    lv.density.resize(lv.grid.size());
    for (Eigen::Index i = 0; i < lv.grid.size(); ++i) {
      const std::complex<double> z = lv.grid.nodes(i);
      double log_density = log_weight(spec_.weight, z, spec_.domain);
      if (spec_.domain == Domain::unit_disk) {
        if (extra_power != 0) log_density += extra_power * std::log1p(-std::norm(z));
      } else {
        const double power = spec_.half_plane->alpha + extra_power;
        if (power != 0) log_density += power * std::log(z.imag());
        log_density -= spec_.half_plane->beta * std::norm(z);
      }
      lv.density(i) = std::exp(log_density);
    }
    levels_.push_back(std::move(lv));
  }
}

RealArray<double> NormEvaluator::abs_pow(const PolyFunctiond& g, const Level& level) const {
  if (g.is_zero()) return RealArray<double>::Zero(level.grid.size());
  const ComplexArray<double> values = g(level.grid.nodes);
  RealArray<double> mag2 = values.abs2();
  if (spec_.p != 2) mag2 = mag2.pow(spec_.p / 2);
  return mag2 * level.density;
}

RefinementResult<double> NormEvaluator::integral_of_power(const PolyFunctiond& g) const {
  return refine_levels<double>(
      [&](int level) {
        const Level& lv = levels_[static_cast<std::size_t>(level)];
        return integrate(lv.grid, abs_pow(g, lv));
      },
      options_.rel_tol, options_.max_level);
}

RefinementResult<double> NormEvaluator::seminorm_integral(const PolyFunctiond& f) const {
  if (spec_.kind == SpaceKind::bergman) return integral_of_power(f);
  const PolyFunctiond dz = d_z(f);
  const PolyFunctiond dzbar = d_zbar(f);
  return refine_levels<double>(
      [&](int level) {
        const Level& lv = levels_[static_cast<std::size_t>(level)];
        return integrate(lv.grid, RealArray<double>(abs_pow(dz, lv) + abs_pow(dzbar, lv)));
      },
      options_.rel_tol, options_.max_level);
}

QuadratureStatus NormEvaluator::status(const RefinementResult<double>& r) const {
  return QuadratureStatus{r.converged, r.rel_change, r.level, truncated_, radius_};
}

NormResult NormEvaluator::norm(const PolyFunctiond& f) const {
  const auto integral = seminorm_integral(f);
  NormResult out;
  out.quadrature = status(integral);
  const double p = spec_.p;
  const double seminorm_p = std::max(0.0, integral.value);
  out.seminorm = std::pow(seminorm_p, 1 / p);
  if (spec_.kind == SpaceKind::bergman) {
    out.point_term = 0;
    out.full_norm = out.seminorm;
  } else {
    out.point_term = std::pow(std::abs(f(spec_.base_point())), p);
    out.full_norm = std::pow(out.point_term + seminorm_p, 1 / p);
  }
  return out;
}

NormResult NormEvaluator::norm_of_difference(const PolyFunctiond& f, const PolyFunctiond& g) const {
  return norm(sub(f, g));
}

namespace {
NormResult checked_norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options,
                        SpaceKind expected) {
  if (spec.kind != expected)
    throw std::invalid_argument("space kind is " + to_string(spec.kind) + ", expected " + to_string(expected));
  return NormEvaluator(spec, options).norm(f);
}
}  // namespace

NormResult bergman_norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options) {
  return checked_norm(f, spec, options, SpaceKind::bergman);
}

NormResult dirichlet_norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options) {
  return checked_norm(f, spec, options, SpaceKind::dirichlet);
}

NormResult besov_norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options) {
  return checked_norm(f, spec, options, SpaceKind::besov);
}

NormResult norm(const PolyFunctiond& f, const SpaceSpec& spec, const QuadratureOptions& options) {
  return NormEvaluator(spec, options).norm(f);
}

NormResult norm_of_difference(const PolyFunctiond& f, const PolyFunctiond& g, const SpaceSpec& spec,
                              const QuadratureOptions& options) {
  return NormEvaluator(spec, options).norm_of_difference(f, g);
}

}  // namespace polyanalytic
