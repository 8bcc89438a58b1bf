#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "oscint/runner.hpp"
#include "oscint/specfun.hpp"

namespace {

std::string config_dir() {
  const char* dir = std::getenv("OSCINT_CONFIG_DIR");
  return dir != nullptr ? dir : "configs";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

nlohmann::json base_config() {
  return nlohmann::json::parse(R"({
    "phase": {"p": 2.0, "perturbation": [0.5]},
    "amplitude": {"germ": [1.0, 1.0], "r1": 0.2, "r2": 0.45},
    "sign": 1,
    "region": "half-line-positive",
    "N": 4,
    "lambda_grid": {"start": 100.0, "factor": 2.0, "count": 5},
    "output_path": "out.csv"
  })");
}

void expect_config_error(const std::string& json_text,
                         const std::string& needle) {
  try {
    oscint::parse_config(json_text, "test");
    FAIL_CHECK("expected ConfigError mentioning '" << needle << "'");
  } catch (const oscint::ConfigError& e) {
    const std::string what = e.what();
    CHECK_MESSAGE(what.find(needle) != std::string::npos,
                  "message was: " << what);
  }
}

TEST_SUITE("runner") {

TEST_CASE("load_config reads the fresnel preset") {
  const oscint::RunConfig config =
      oscint::load_config(config_dir() + "/fresnel.json");
  CHECK(config.p == 2.0);
  CHECK(config.perturbation.empty());
  CHECK(config.germ == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(config.plateau_radius == 0.3);
  CHECK(config.support_radius == 0.6);
  CHECK(config.sign == 1);
  CHECK(config.region == oscint::Region::half_line_positive);
  CHECK(config.truncation == 4);
  CHECK(config.variant == oscint::Variant::corrected);
  CHECK(config.lambda_grid.start == 100.0);
  CHECK(config.lambda_grid.factor == 2.0);
  CHECK(config.lambda_grid.count == 5);
  CHECK(config.output_path == "fresnel.csv");
}

TEST_CASE("the exp preset expands to factorial-reciprocal coefficients") {
  const oscint::RunConfig config =
      oscint::load_config(config_dir() + "/exp-phase.json");
  REQUIRE(config.perturbation.size() == 12);
  CHECK(config.perturbation[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(config.perturbation[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(config.perturbation[11] ==
        doctest::Approx(1.0 / oscint::gamma(13.0)).epsilon(1e-14));
}

TEST_CASE("load_config rejects a missing file") {
  CHECK_THROWS_AS(oscint::load_config("configs/absent.json"),
                  oscint::ConfigError);
}

TEST_CASE("config validation names the offending field") {
  nlohmann::json doc = base_config();
  doc.erase("N");
  expect_config_error(doc.dump(), "N: required field is missing");

  doc = base_config();
  doc["region"] = "nowhere";
  expect_config_error(doc.dump(), "region: must be one of");

  doc = base_config();
  doc["amplitude"]["r2"] = 0.1;
  expect_config_error(doc.dump(), "amplitude.r2: must exceed amplitude.r1");

  doc = base_config();
  doc["phase"]["perturbation"] = {3.0};
  doc["amplitude"]["r2"] = 0.45;
  expect_config_error(doc.dump(), "certified inversion radius");

  doc = base_config();
  doc["sign"] = 2;
  expect_config_error(doc.dump(), "sign: must be 1 or -1");

  doc = base_config();
  doc["N"] = 2;
  expect_config_error(doc.dump(), "N: must be at least p + 1");

  doc = base_config();
  doc["phase"]["p"] = 2.5;
  doc["region"] = "full-line";
  doc["N"] = 5;
  expect_config_error(doc.dump(), "requires an integer exponent");

  doc = base_config();
  doc["region"] = "full-line";
  doc["N"] = 2;
  expect_config_error(doc.dump(), "N: must exceed p");

  doc = base_config();
  doc["lambda_grid"]["factor"] = 1.0;
  expect_config_error(doc.dump(), "lambda_grid.factor: must exceed 1");

  doc = base_config();
  doc["lambda_grid"]["count"] = 2;
  expect_config_error(doc.dump(), "lambda_grid.count: need at least 3");

  doc = base_config();
  doc["phase"]["preset"] = "exp";
  expect_config_error(doc.dump(), "phase.perturbation: conflicts");

  doc = base_config();
  doc["phase"].erase("perturbation");
  doc["phase"]["preset"] = "gaussian";
  expect_config_error(doc.dump(), "phase.preset: unknown preset");

  doc = base_config();
  doc["phase"]["J"] = 5;
  expect_config_error(doc.dump(),
                      "phase.J: only meaningful together with phase.preset");

  doc = base_config();
  doc["amplitude"]["germ"] = nlohmann::json::array();
  expect_config_error(doc.dump(), "amplitude.germ: must be non-empty");

  doc = base_config();
  doc["variant"] = "fancy";
  expect_config_error(doc.dump(), "variant: must be");

  expect_config_error("{ not json", "parse error");
}

TEST_CASE("the paper variant is selectable") {
  nlohmann::json doc = base_config();
  doc["region"] = "full-line";
  doc["variant"] = "paper";
  const oscint::RunConfig config = oscint::parse_config(doc.dump(), "test");
  CHECK(config.variant == oscint::Variant::paper);
}

TEST_CASE("run writes a deterministic CSV and passes on the fresnel preset") {
  oscint::RunConfig config =
      oscint::load_config(config_dir() + "/fresnel.json");
  const std::filesystem::path tmp1 =
      std::filesystem::temp_directory_path() / "oscint-runner-test-1.csv";
  const std::filesystem::path tmp2 =
      std::filesystem::temp_directory_path() / "oscint-runner-test-2.csv";

  config.output_path = tmp1.string();
  std::ostringstream table1;
  CHECK(oscint::run(config, table1) == oscint::kExitPass);

  const std::string csv1 = read_file(tmp1);
  CHECK(csv1.rfind("lambda,expansion_re,expansion_im,oracle_re,oracle_im,"
                   "abs_residual,error_estimate\n",
                   0) == 0);
  CHECK(count_lines(csv1) == 7);  // header + 5 rows + verdict footer
  CHECK(csv1.find("\n100,") != std::string::npos);
  CHECK(csv1.find("# slope=") != std::string::npos);
  CHECK(csv1.find("verdict=pass") != std::string::npos);

  const std::string table_text = table1.str();
  CHECK(table_text.rfind("#  k   exponent", 0) == 0);
  CHECK(table_text.find("verdict=pass") != std::string::npos);

  config.output_path = tmp2.string();
  std::ostringstream table2;
  CHECK(oscint::run(config, table2) == oscint::kExitPass);
  CHECK(read_file(tmp2) == csv1);
  CHECK(table2.str() == table_text);

  std::filesystem::remove(tmp1);
  std::filesystem::remove(tmp2);
}

TEST_CASE("run reports a slope failure for an expansion that misses a term") {
  // Even monomial phase with an even amplitude: the paper parity zeroes
  // every retained coefficient, so the residual decays only like the true
  // integral, lambda^{-1/2}, far off the advertised remainder rate.
  nlohmann::json doc = base_config();
  doc["phase"]["perturbation"] = nlohmann::json::array();
  doc["amplitude"]["germ"] = {1.0};
  doc["amplitude"]["r1"] = 0.3;
  doc["amplitude"]["r2"] = 0.6;
  doc["region"] = "full-line";
  doc["variant"] = "paper";
  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "oscint-runner-test-fail.csv";
  doc["output_path"] = tmp.string();

  const oscint::RunConfig config = oscint::parse_config(doc.dump(), "test");
  std::ostringstream table;
  CHECK(oscint::run(config, table) == oscint::kExitSlopeFail);
  const std::string csv = read_file(tmp);
  CHECK(csv.find("verdict=fail") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("run rejects missing or unwritable output paths") {
  oscint::RunConfig config =
      oscint::load_config(config_dir() + "/fresnel.json");
  std::ostringstream table;

  config.output_path.clear();
  CHECK_THROWS_AS(oscint::run(config, table), oscint::ConfigError);

  config.output_path = "/nonexistent-directory/oscint.csv";
  CHECK_THROWS_AS(oscint::run(config, table), oscint::ConfigError);
}

TEST_CASE("print_coefficients emits one row per term") {
  const oscint::RunConfig config =
      oscint::load_config(config_dir() + "/fresnel.json");
  std::ostringstream out;
  CHECK(oscint::print_coefficients(config, out) == oscint::kExitPass);
  const std::string text = out.str();
  CHECK(text.rfind("#  k   exponent", 0) == 0);
  CHECK(count_lines(text) == 3);  // header + terms k = 0, 1
  CHECK(text.find("0.62665706") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
