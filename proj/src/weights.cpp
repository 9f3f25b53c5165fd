#include "polyanalytic/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace polyanalytic {

namespace {

using std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt_num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void check_beta_n(double beta, int n, const char* what) {
  if (!(beta > 0)) throw std::invalid_argument(std::string(what) + ": beta must be > 0");
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be a positive integer");
}

void check_angular(const weight::AngularPoly& a) {
  if (!(a.alpha > 0)) throw std::invalid_argument("angular-poly: alpha must be > 0");
  if (a.theta_max && !(*a.theta_max > 0 && *a.theta_max <= 2 * pi))
    throw std::invalid_argument("angular-poly: theta_max must lie in (0, 2 pi]");
}

double log_angular(const weight::AngularPoly& a, double theta, Domain domain) {
  const double tmax = theta_max(a, domain);
  if (!(theta >= 0 && theta < tmax))
    throw std::domain_error("angular weight: theta = " + fmt_num(theta) + " outside [0, " + fmt_num(tmax) + ")");
  return a.alpha * std::log(tmax * tmax - theta * theta);
}

double log_radial(const weight::RadialProfile& radial, double s, Domain domain) {
  return std::visit(overloaded{[&](const weight::PowerLaw& pl) {
                                 const double base = domain == Domain::unit_disk ? 1 - s : s;
                                 return pl.gamma == 0 ? 0.0 : pl.gamma * std::log(base);
                               },
                               [&](const weight::ExpAbsPow& e) { return -e.beta * std::pow(s, e.n); }},
                    radial);
}

}  // namespace

void validate(const WeightSpec& w) {
  std::visit(overloaded{[](const weight::Uniform&) {}, [](const weight::ExpAbs&) {},
                        [](const weight::ExpAbsPow& e) { check_beta_n(e.beta, e.n, "exp-abs-pow"); },
                        [](const weight::ExpRePow& e) { check_beta_n(e.beta, e.n, "exp-re-pow"); },
                        [](const weight::AngularPoly& a) { check_angular(a); },
                        [](const weight::Product& p) {
                          std::visit(overloaded{[](const weight::PowerLaw& pl) {
                                                  if (!(pl.gamma >= 0))
                                                    throw std::invalid_argument("power-law: gamma must be >= 0");
                                                },
                                                [](const weight::ExpAbsPow& e) {
                                                  check_beta_n(e.beta, e.n, "exp-abs-pow");
                                                }},
                                     p.radial);
                          if (const auto* a = std::get_if<weight::AngularPoly>(&p.angular)) check_angular(*a);
                        }},
             w);
}

std::string describe(const WeightSpec& w) {
  const auto angular_tag = [](const weight::AngularPoly& a) {
    std::string s = "angular-poly(alpha=" + fmt_num(a.alpha);
    if (a.theta_max) s += ",theta_max=" + fmt_num(*a.theta_max);
    return s + ")";
  };
  const auto exp_tag = [](const char* name, double beta, int n) {
    return std::string(name) + "(beta=" + fmt_num(beta) + ",n=" + std::to_string(n) + ")";
  };
  return std::visit(
      overloaded{[](const weight::Uniform&) -> std::string { return "uniform"; },
                 [](const weight::ExpAbs&) -> std::string { return "exp-abs"; },
                 [&](const weight::ExpAbsPow& e) { return exp_tag("exp-abs-pow", e.beta, e.n); },
                 [&](const weight::ExpRePow& e) { return exp_tag("exp-re-pow", e.beta, e.n); },
                 [&](const weight::AngularPoly& a) { return angular_tag(a); },
                 [&](const weight::Product& p) {
                   const std::string radial = std::visit(
                       overloaded{[](const weight::PowerLaw& pl) { return "power-law(gamma=" + fmt_num(pl.gamma) + ")"; },
                                  [&](const weight::ExpAbsPow& e) { return exp_tag("exp-abs-pow", e.beta, e.n); }},
                       p.radial);
                   const std::string angular =
                       std::visit(overloaded{[](const weight::Uniform&) -> std::string { return "uniform"; },
                                             [&](const weight::AngularPoly& a) { return angular_tag(a); }},
                                  p.angular);
                   return "product(" + radial + "*" + angular + ")";
                 }},
      w);
}

bool is_angular(const WeightSpec& w) { return std::holds_alternative<weight::AngularPoly>(w); }

double theta_max(const weight::AngularPoly& a, Domain domain) {
  if (a.theta_max) return *a.theta_max;
  return domain == Domain::unit_disk ? 2 * pi : pi;
}

double reduced_argument(std::complex<double> z) {
  double theta = std::arg(z);
  if (theta < 0) theta += 2 * pi;
  // arg slightly below zero can round up to exactly 2 pi
  if (theta >= 2 * pi) theta = 0;
  return theta;
}

double log_weight(const WeightSpec& w, std::complex<double> z, Domain domain) {
  if (!is_interior(domain, z)) {
    std::ostringstream msg;
    msg << "weight evaluated outside the open " << to_string(domain) << " at z = " << z;
    throw std::domain_error(msg.str());
  }
  const double s = std::abs(z);
  return std::visit(
      overloaded{[](const weight::Uniform&) { return 0.0; }, [&](const weight::ExpAbs&) { return s; },
                 [&](const weight::ExpAbsPow& e) { return -e.beta * std::pow(s, e.n); },
                 [&](const weight::ExpRePow& e) { return -e.beta * std::pow(std::abs(z.real()), e.n); },
                 [&](const weight::AngularPoly& a) { return log_angular(a, reduced_argument(z), domain); },
                 [&](const weight::Product& p) {
                   double lw = log_radial(p.radial, s, domain);
                   if (const auto* a = std::get_if<weight::AngularPoly>(&p.angular))
                     lw += log_angular(*a, reduced_argument(z), domain);
                   return lw;
                 }},
      w);
}

double eval_weight(const WeightSpec& w, std::complex<double> z, Domain domain) {
  return std::exp(log_weight(w, z, domain));
}

ConditionCheck check_condition(const WeightSpec& w, int k, double r0, Domain domain, const ConditionGrid& grid) {
  if (!(r0 > 0 && r0 < 1)) throw std::invalid_argument("check_condition: r0 must lie in (0, 1)");
  if (k < 0) throw std::invalid_argument("check_condition: k must be >= 0");
  if (grid.n_r < 1 || grid.n_z < 1) throw std::invalid_argument("check_condition: grid sizes must be >= 1");
  validate(w);

  const int n_t = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(grid.n_z))));
  const int n_phi = std::max(1, grid.n_z / n_t);
  const double sector = domain == Domain::unit_disk ? 2 * pi : pi;
  const double log_cap = std::log(grid.divergence_cap);

  ConditionCheck out;
  out.witness.k = k;
  out.witness.r0 = r0;
  out.witness.grid_size = static_cast<long>(grid.n_r) * n_t * n_phi;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.n_r; ++i) {
    const double r = r0 + (1 - r0) * i / grid.n_r;
    const double log_rk = k * std::log(r);
    for (int j = 0; j < n_t; ++j) {
      const double radius = r * (j + 0.5) / n_t;
      for (int l = 0; l < n_phi; ++l) {
        const std::complex<double> z = std::polar(radius, sector * (l + 0.5) / n_phi);
        const double log_ratio = log_rk + log_weight(w, z / r, domain) - log_weight(w, z, domain);
        if (log_ratio > best) {
          best = log_ratio;
          out.witness.argmax_z = z;
          out.witness.argmax_r = r;
        }
      }
    }
  }
  out.satisfied = best <= log_cap;
  out.witness.C = std::exp(best);
  return out;
}

std::optional<ConditionWitness> find_min_k(const WeightSpec& w, int k_max, double r0, Domain domain,
                                           const ConditionGrid& grid) {
  if (k_max < 0) throw std::invalid_argument("find_min_k: k_max must be >= 0");
  for (int k = 0; k <= k_max; ++k) {
    auto check = check_condition(w, k, r0, domain, grid);
    if (check.satisfied) return check.witness;
  }
  return std::nullopt;
}

}  // namespace polyanalytic
