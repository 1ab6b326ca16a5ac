// End-to-end checks of the installed command-line surface: exit codes,
// artifact layout, and reproducibility, by spawning the real binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"

namespace fs = std::filesystem;

namespace {

#ifndef SAWSIM_CLI_PATH
#define SAWSIM_CLI_PATH "sawsim"
#endif

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args, const fs::path& workdir) {
  const fs::path log = workdir / "cli_output.log";
  const std::string cmd =
      "cd " + workdir.string() + " && " + SAWSIM_CLI_PATH + " " + args + " > " +
      log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = test_helpers::read_file(log);
  return result;
}

}  // namespace

TEST_CASE("pipeline subcommand succeeds with defaults") {
  const auto dir = test_helpers::make_temp_dir("cli_pipeline");
  const auto res = run_cli("pipeline -o out", dir);
  CHECK(res.exit_code == 0);
  CHECK(fs::exists(dir / "out" / "manifest.json"));
  CHECK(fs::exists(dir / "out" / "thermo.json"));
  CHECK(res.output.find("piecewise horizons: 1") != std::string::npos);
}

TEST_CASE("unknown config key exits with status 2 and names the key") {
  const auto dir = test_helpers::make_temp_dir("cli_badkey");
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "[material]\nscreening = 1e9\n";
  }
  const auto res = run_cli("pipeline -c run.ini -o out", dir);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("material.screening") != std::string::npos);
}

TEST_CASE("no-horizon configuration still exits 0") {
  const auto dir = test_helpers::make_temp_dir("cli_nohorizon");
  const auto res = run_cli("pipeline -o out --set observer.v=500", dir);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("piecewise horizons: 0") != std::string::npos);
}

TEST_CASE("empty sweep values exit with status 2") {
  const auto dir = test_helpers::make_temp_dir("cli_empty_sweep");
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "[sweep]\nparameter = material.K2\nvalues =\n";
  }
  const auto res = run_cli("sweep -c run.ini -o out", dir);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("values") != std::string::npos);
}

TEST_CASE("density subcommand writes only the density artifacts") {
  const auto dir = test_helpers::make_temp_dir("cli_density");
  const auto res = run_cli("density -o out", dir);
  CHECK(res.exit_code == 0);
  CHECK(fs::exists(dir / "out" / "density.csv"));
  CHECK(!fs::exists(dir / "out" / "speed_fixed_point.csv"));
  CHECK(fs::exists(dir / "out" / "manifest.json"));
}

TEST_CASE("sweep subcommand emits an ordered reproducible summary") {
  const auto dir = test_helpers::make_temp_dir("cli_sweep");
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "[sweep]\nparameter = material.K2\nvalues = 1e-4, 1e-3, 1e-2\n";
  }
  const auto first = run_cli("sweep -c run.ini -o out1", dir);
  CHECK(first.exit_code == 0);
  const auto second = run_cli("sweep -c run.ini -o out2", dir);
  CHECK(second.exit_code == 0);
  const auto s1 = test_helpers::read_file(dir / "out1" / "sweep.csv");
  const auto s2 = test_helpers::read_file(dir / "out2" / "sweep.csv");
  CHECK(!s1.empty());
  CHECK(s1 == s2);
}

TEST_CASE("environment variable supplies the default output root") {
  const auto dir = test_helpers::make_temp_dir("cli_envroot");
  const fs::path log = dir / "cli_output.log";
  const std::string cmd = "cd " + dir.string() + " && SAWSIM_OUTPUT_ROOT=" + dir.string() +
                          "/envroot " + SAWSIM_CLI_PATH + " density > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(fs::exists(dir / "envroot" / "run" / "density.csv"));
}
