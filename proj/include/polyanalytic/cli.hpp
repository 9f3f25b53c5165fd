#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyanalytic/experiments.hpp"

namespace polyanalytic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFailed = 2;

/// Invalid or missing flag, or a malformed function file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  SpaceSpec space;
  std::string function_path;
  std::optional<PolyFunctiond> function;
  std::vector<double> r_grid = default_r_grid();
  double r = 0.99;
  std::vector<int> m_grid;
  ExperimentOptions experiment;
  std::optional<std::string> output;
  std::uint64_t seed = 20240501;
  long mc_samples = 1000000;
  // check-weight
  int k = 0;
  std::optional<int> k_max;
  double r0 = 0.5;
  ConditionGrid condition_grid;

  bool help = false;
  std::string help_text;
};

/// argv[0] is the program name. Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

/// Executes a parsed configuration; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the 0/1/2 exit-code contract.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Monte Carlo estimate of int_{Im z > 0} Im(z) exp(-|z|^2) dA with its
/// standard error, sampling z from the planar Gaussian exp(-|z|^2) / pi.
struct MonteCarloEstimate {
  double value = 0;
  double std_error = 0;
};
MonteCarloEstimate monte_carlo_halfplane_moment(long samples, std::uint64_t seed);

}  // namespace polyanalytic::cli
