#include "oscint/runner.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "oscint/oracle.hpp"

namespace oscint {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw ConfigError(origin + ": " + message);
}

const json& require_key(const json& parent, const char* key,
                        const std::string& origin, const std::string& path) {
  const auto it = parent.find(key);
  if (it == parent.end()) fail(origin, path + ": required field is missing");
  return *it;
}

double number_field(const json& node, const std::string& origin,
                    const std::string& path) {
  if (!node.is_number()) fail(origin, path + ": expected a number");
  return node.get<double>();
}

int integer_field(const json& node, const std::string& origin,
                  const std::string& path) {
  if (!node.is_number_integer()) fail(origin, path + ": expected an integer");
  return node.get<int>();
}

std::string string_field(const json& node, const std::string& origin,
                         const std::string& path) {
  if (!node.is_string()) fail(origin, path + ": expected a string");
  return node.get<std::string>();
}

std::vector<double> number_array_field(const json& node,
                                       const std::string& origin,
                                       const std::string& path) {
  if (!node.is_array()) fail(origin, path + ": expected an array of numbers");
  std::vector<double> values;
  values.reserve(node.size());
  for (const json& item : node) {
    if (!item.is_number()) {
      fail(origin, path + ": expected an array of numbers");
    }
    values.push_back(item.get<double>());
  }
  return values;
}

const json& object_field(const json& parent, const char* key,
                         const std::string& origin, const std::string& path) {
  const json& node = require_key(parent, key, origin, path);
  if (!node.is_object()) fail(origin, path + ": expected an object");
  return node;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

AsymptoticExpansion build_expansion(const RunConfig& config,
                                    const PhaseModel& phase,
                                    const Amplitude& amplitude) {
  switch (config.region) {
    case Region::half_line_positive:
      return half_line_positive(phase, amplitude, config.sign,
                                config.truncation);
    case Region::half_line_negative:
      return half_line_negative(phase, amplitude, config.sign,
                                config.truncation);
    case Region::full_line:
      return full_line(phase, amplitude, config.sign, config.truncation,
                       config.variant);
  }
  throw std::logic_error("build_expansion: unhandled region");
}

void print_table(const AsymptoticExpansion& expansion, std::ostream& out) {
  out << "#  k   exponent      coeff_re                 coeff_im\n";
  char buf[160];
  for (const ExpansionTerm& term : expansion.terms) {
    std::snprintf(buf, sizeof buf, "%4d   %-12.8g  %- 24.17g %- 24.17g\n",
                  term.k, term.exponent, term.coefficient.real(),
                  term.coefficient.imag());
    out << buf;
  }
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

RunConfig parse_config(const std::string& json_text,
                       const std::string& origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // nlohmann's message already carries line and column.
    fail(origin, e.what());
  }
  if (!root.is_object()) fail(origin, "top-level value must be an object");

  RunConfig config;

  const json& phase_node = object_field(root, "phase", origin, "phase");
  config.p = number_field(require_key(phase_node, "p", origin, "phase.p"),
                          origin, "phase.p");
  if (!(config.p > 0.0)) fail(origin, "phase.p: must be positive");

  const bool has_perturbation = phase_node.contains("perturbation");
  const bool has_preset = phase_node.contains("preset");
  if (has_perturbation && has_preset) {
    fail(origin, "phase.perturbation: conflicts with phase.preset");
  }
  if (has_preset) {
    const std::string preset =
        string_field(phase_node["preset"], origin, "phase.preset");
    if (preset != "exp") {
      fail(origin, "phase.preset: unknown preset '" + preset +
                       "' (available: \"exp\")");
    }
    int j_max = 12;
    if (phase_node.contains("J")) {
      j_max = integer_field(phase_node["J"], origin, "phase.J");
      if (j_max < 1) fail(origin, "phase.J: must be at least 1");
    }
    config.perturbation = exp_perturbation(j_max);
  } else {
    if (phase_node.contains("J")) {
      fail(origin, "phase.J: only meaningful together with phase.preset");
    }
    if (has_perturbation) {
      config.perturbation = number_array_field(phase_node["perturbation"],
                                               origin, "phase.perturbation");
    }
  }

  const json& amp_node = object_field(root, "amplitude", origin, "amplitude");
  config.germ = number_array_field(
      require_key(amp_node, "germ", origin, "amplitude.germ"), origin,
      "amplitude.germ");
  if (config.germ.empty()) fail(origin, "amplitude.germ: must be non-empty");
  config.plateau_radius = number_field(
      require_key(amp_node, "r1", origin, "amplitude.r1"), origin,
      "amplitude.r1");
  if (!(config.plateau_radius > 0.0)) {
    fail(origin, "amplitude.r1: must be positive");
  }
  config.support_radius = number_field(
      require_key(amp_node, "r2", origin, "amplitude.r2"), origin,
      "amplitude.r2");
  if (!(config.support_radius > config.plateau_radius)) {
    fail(origin, "amplitude.r2: must exceed amplitude.r1");
  }

  config.sign =
      integer_field(require_key(root, "sign", origin, "sign"), origin, "sign");
  if (config.sign != 1 && config.sign != -1) {
    fail(origin, "sign: must be 1 or -1");
  }

  const std::string region = string_field(
      require_key(root, "region", origin, "region"), origin, "region");
  if (region == "half-line-positive") {
    config.region = Region::half_line_positive;
  } else if (region == "half-line-negative") {
    config.region = Region::half_line_negative;
  } else if (region == "full-line") {
    config.region = Region::full_line;
  } else {
    fail(origin, "region: must be one of \"half-line-positive\", "
                 "\"half-line-negative\", \"full-line\"");
  }

  config.truncation =
      integer_field(require_key(root, "N", origin, "N"), origin, "N");
  if (config.region == Region::half_line_positive) {
    if (static_cast<double>(config.truncation) < config.p + 1.0) {
      fail(origin, "N: must be at least p + 1 = " +
                       format_double(config.p + 1.0) +
                       " for region half-line-positive");
    }
  } else {
    if (config.p != std::floor(config.p)) {
      fail(origin, "phase.p: region \"" + region +
                       "\" requires an integer exponent");
    }
    if (static_cast<double>(config.truncation) <= config.p) {
      fail(origin, "N: must exceed p = " + format_double(config.p) +
                       " for region \"" + region + "\"");
    }
  }

  if (root.contains("variant")) {
    const std::string variant =
        string_field(root["variant"], origin, "variant");
    if (variant == "corrected") {
      config.variant = Variant::corrected;
    } else if (variant == "paper") {
      config.variant = Variant::paper;
    } else {
      fail(origin, "variant: must be \"corrected\" or \"paper\"");
    }
  }

  const json& grid_node =
      object_field(root, "lambda_grid", origin, "lambda_grid");
  config.lambda_grid.start = number_field(
      require_key(grid_node, "start", origin, "lambda_grid.start"), origin,
      "lambda_grid.start");
  if (!(config.lambda_grid.start > 0.0)) {
    fail(origin, "lambda_grid.start: must be positive");
  }
  config.lambda_grid.factor = number_field(
      require_key(grid_node, "factor", origin, "lambda_grid.factor"), origin,
      "lambda_grid.factor");
  if (!(config.lambda_grid.factor > 1.0)) {
    fail(origin, "lambda_grid.factor: must exceed 1 (grid must be strictly "
                 "increasing)");
  }
  config.lambda_grid.count = integer_field(
      require_key(grid_node, "count", origin, "lambda_grid.count"), origin,
      "lambda_grid.count");
  if (config.lambda_grid.count < 3) {
    fail(origin, "lambda_grid.count: need at least 3 points for the decay "
                 "slope");
  }

  if (root.contains("output_path")) {
    config.output_path =
        string_field(root["output_path"], origin, "output_path");
  }

  // Geometry check needs the derived radii, so build the phase model now.
  const PhaseModel phase = build_phase(config.p, config.perturbation);
  if (!(config.support_radius <= phase.validity_radius)) {
    fail(origin,
         "amplitude.r2: support radius " +
             format_double(config.support_radius) +
             " exceeds the certified inversion radius " +
             format_double(phase.validity_radius) + " of this phase");
  }

  return config;
}

int run(const RunConfig& config, std::ostream& coeff_out) {
  const PhaseModel phase = build_phase(config.p, config.perturbation);
  const Amplitude amplitude(config.germ, config.plateau_radius,
                            config.support_radius);
  const AsymptoticExpansion expansion =
      build_expansion(config, phase, amplitude);
  print_table(expansion, coeff_out);

  struct Row {
    double lambda;
    std::complex<double> expansion_value;
    std::complex<double> oracle_value;
    double residual;
    double error_estimate;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(config.lambda_grid.count));
  for (int i = 0; i < config.lambda_grid.count; ++i) {
    const double lambda =
        config.lambda_grid.start * std::pow(config.lambda_grid.factor, i);
    QuadratureResult oracle;
    try {
      oracle = integrate_oscillatory(phase, amplitude, lambda, config.sign,
                                     config.region);
    } catch (const OracleError& e) {
      std::cerr << "oracle failure at lambda=" << lambda << ": " << e.what()
                << "\n";
      return kExitOracleFailure;
    }
    const std::complex<double> value = evaluate(expansion, lambda);
    rows.push_back({lambda, value, oracle.value, std::abs(value - oracle.value),
                    oracle.error_estimate});
  }

  std::vector<std::pair<double, double>> points;
  points.reserve(rows.size());
  for (const Row& row : rows) {
    // A residual of exactly zero would poison the log-log fit; clamp to the
    // smallest normal value (only reachable when expansion and oracle agree
    // to the last bit, i.e. both vanish).
    points.emplace_back(
        row.lambda,
        std::max(row.residual, std::numeric_limits<double>::min()));
  }
  const double slope = decay_slope(points);
  const double expected = -expansion.remainder_exponent;
  const bool pass = slope <= expected + 0.2;

  if (config.output_path.empty()) {
    throw ConfigError(
        "output_path: no output file given (set it in the config or pass "
        "--output)");
  }
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) {
    throw ConfigError("output_path: cannot open '" + config.output_path +
                      "' for writing");
  }
  out << "lambda,expansion_re,expansion_im,oracle_re,oracle_im,abs_residual,"
         "error_estimate\n";
  char buf[512];
  for (const Row& row : rows) {
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", row.lambda,
                  row.expansion_value.real(), row.expansion_value.imag(),
                  row.oracle_value.real(), row.oracle_value.imag(),
                  row.residual, row.error_estimate);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "# slope=%.17g expected=%.17g verdict=%s\n",
                slope, expected, pass ? "pass" : "fail");
  out << buf;
  coeff_out << buf;  // mirror the verdict for interactive use
  return pass ? kExitPass : kExitSlopeFail;
}

int print_coefficients(const RunConfig& config, std::ostream& out) {
  const PhaseModel phase = build_phase(config.p, config.perturbation);
  const Amplitude amplitude(config.germ, config.plateau_radius,
                            config.support_radius);
  print_table(build_expansion(config, phase, amplitude), out);
  return kExitPass;
}

}  // namespace oscint
