#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscint/expansion.hpp"

namespace oscint {

/// A config file could not be read, parsed, or validated. The message
/// names the offending field (or the line/column for syntax errors).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometric lambda grid: start, start*factor, ..., count points.
struct LambdaGrid {
  double start = 0.0;
  double factor = 0.0;
  int count = 0;
};

/// Fully resolved run description (presets already expanded).
struct RunConfig {
  double p = 1.0;
  std::vector<double> perturbation;
  std::vector<double> germ;
  double plateau_radius = 0.0;
  double support_radius = 0.0;
  int sign = +1;
  Region region = Region::half_line_positive;
  int truncation = 0;  // the N in the remainder bound
  Variant variant = Variant::corrected;
  LambdaGrid lambda_grid;
  std::string output_path;
};

/// Process exit codes of the run pipeline.
inline constexpr int kExitPass = 0;
inline constexpr int kExitSlopeFail = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitOracleFailure = 3;

/// Parses and validates a JSON config. Every failure throws ConfigError
/// with the offending field named.
RunConfig load_config(const std::string& path);

/// Same, from an in-memory JSON document; `origin` labels error messages.
RunConfig parse_config(const std::string& json_text, const std::string& origin);

/// Full pipeline: build the expansion, print its coefficient table to
/// `coeff_out`, evaluate expansion and quadrature oracle on the lambda
/// grid, write the CSV (rows in grid order, %.17g, deterministic bytes),
/// append the slope-verdict footer, and return the exit code: kExitPass /
/// kExitSlopeFail / kExitOracleFailure.
int run(const RunConfig& config, std::ostream& coeff_out);

/// Prints only the coefficient table. Returns kExitPass.
int print_coefficients(const RunConfig& config, std::ostream& out);

}  // namespace oscint
