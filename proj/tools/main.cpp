// Command-line front end: asymptotic expansion of an oscillatory integral
// checked against adaptive quadrature over a lambda grid.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oscint/oracle.hpp"
#include "oscint/runner.hpp"
#include "oscint/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "oscint: asymptotic expansions of oscillatory integrals with a "
      "quadrature cross-check"};
  app.set_version_flag("--version", std::string("oscint ") + oscint::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string variant;
  std::string output_path;

  CLI::App* run_cmd = app.add_subcommand(
      "run",
      "Evaluate expansion and quadrature oracle over the lambda grid, write "
      "the CSV report, and return the slope verdict");
  run_cmd->add_option("--config", config_path, "JSON run configuration")
      ->required();
  run_cmd
      ->add_option("--variant", variant,
                   "Override the full-line sign convention")
      ->check(CLI::IsMember({"corrected", "paper"}));
  run_cmd->add_option("--output", output_path,
                      "Override the CSV output path from the config");

  CLI::App* coeffs_cmd = app.add_subcommand(
      "coeffs", "Print the expansion coefficient table and exit");
  coeffs_cmd->add_option("--config", config_path, "JSON run configuration")
      ->required();
  coeffs_cmd
      ->add_option("--variant", variant,
                   "Override the full-line sign convention")
      ->check(CLI::IsMember({"corrected", "paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // --help/--version land here with code 0; everything else is a usage
    // problem, reported with the config-error exit status.
    return code == 0 ? 0 : oscint::kExitConfigError;
  }

  try {
    oscint::RunConfig config = oscint::load_config(config_path);
    if (!variant.empty()) {
      config.variant = (variant == "paper") ? oscint::Variant::paper
                                            : oscint::Variant::corrected;
    }
    if (!output_path.empty()) config.output_path = output_path;
    if (coeffs_cmd->parsed()) {
      return oscint::print_coefficients(config, std::cout);
    }
    return oscint::run(config, std::cout);
  } catch (const oscint::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return oscint::kExitConfigError;
  } catch (const oscint::OracleError& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return oscint::kExitOracleFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return oscint::kExitConfigError;
  }
}
