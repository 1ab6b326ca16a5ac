#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "sawsim/errors.hpp"
#include "sawsim/pipeline.hpp"

using namespace sawsim;
namespace fs = std::filesystem;

TEST_CASE("default pipeline run produces the full artifact set") {
  const auto dir = test_helpers::make_temp_dir("pipeline_default");
  io::RunConfig cfg;
  const auto res = run_pipeline(cfg, dir, StageSelection::pipeline(cfg));

  CHECK(res.artifacts.size() >= 5);
  for (const char* name : {"resolved_config.ini", "density.csv", "speed_fixed_point.csv",
                           "speed_piecewise.csv", "horizon_piecewise.json",
                           "horizon_fixed_point.json", "thermo.json"}) {
    CHECK(fs::exists(dir / name));
  }
  CHECK(fs::exists(dir / "manifest.json"));

  REQUIRE(res.horizon_piecewise.has_value());
  CHECK(res.horizon_piecewise->horizons.size() == 1);
  REQUIRE(res.horizon_fixed_point.has_value());
  CHECK(res.horizon_fixed_point->horizons.size() == 1);

  // Manifest checksums refer to files as written.
  for (const auto& a : res.artifacts) {
    CHECK(fs::file_size(a.path) == a.bytes);
    CHECK(io::fnv1a64_hex(a.path) == a.checksum);
  }
  CHECK(res.manifest["diagnostics"].contains("gradient_ratio"));

  SUBCASE("data artifacts are byte-identical across reruns") {
    const auto dir2 = test_helpers::make_temp_dir("pipeline_rerun");
    const auto res2 = run_pipeline(cfg, dir2, StageSelection::pipeline(cfg));
    REQUIRE(res.artifacts.size() == res2.artifacts.size());
    for (std::size_t i = 0; i < res.artifacts.size(); ++i) {
      CHECK(res.artifacts[i].name == res2.artifacts[i].name);
      CHECK(test_helpers::read_file(res.artifacts[i].path) ==
            test_helpers::read_file(res2.artifacts[i].path));
    }
  }
}

TEST_CASE("slow observer yields an empty horizon list, not an error") {
  const auto dir = test_helpers::make_temp_dir("pipeline_slow");
  io::RunConfig cfg;
  cfg.observer.use_optimal = false;
  cfg.observer.v = 500.0;
  const auto res = run_pipeline(cfg, dir, StageSelection::pipeline(cfg));
  REQUIRE(res.horizon_piecewise.has_value());
  CHECK(res.horizon_piecewise->horizons.empty());
  CHECK(res.horizon_fixed_point->horizons.empty());
  CHECK(fs::exists(dir / "thermo.json"));
}

TEST_CASE("invalid material aborts with a config error") {
  const auto dir = test_helpers::make_temp_dir("pipeline_bad");
  io::RunConfig cfg;
  cfg.material.c0 = -1.0;
  CHECK_THROWS_AS(run_pipeline(cfg, dir, StageSelection::pipeline(cfg)), ConfigError);
}

TEST_CASE("wave and ray stages append their artifacts") {
  const auto dir = test_helpers::make_temp_dir("pipeline_wave_rays");
  io::RunConfig cfg;
  cfg.wave.enabled = true;
  cfg.wave.n_wavelengths = 8.0;
  cfg.rays.enabled = true;
  cfg.rays.count = 8;
  const auto res = run_pipeline(cfg, dir, StageSelection::pipeline(cfg));
  CHECK(fs::exists(dir / "wave_probes.csv"));
  CHECK(fs::exists(dir / "rays.csv"));
  const auto& rays = res.manifest["diagnostics"]["rays"];
  CHECK(rays["trapped_inside"] == 4);
  CHECK(rays["escaped_outside"] == 4);
  CHECK(rays["exponent_fit"]["relative_deviation"].get<double>() < 1e-6);
}

TEST_CASE("sweep over the coupling constant") {
  const auto dir = test_helpers::make_temp_dir("sweep_k2");
  io::RunConfig cfg;
  cfg.sweep.present = true;
  cfg.sweep.parameter = "material.K2";
  cfg.sweep.values = {1e-4, 1e-3, 1e-2};
  const auto res = run_sweep(cfg, dir);

  REQUIRE(res.rows.size() == 3);
  for (const auto& row : res.rows) {
    CHECK(row.status == "ok");
    CHECK(row.horizon_count == 1);
  }
  // Ramp temperature is linear in K2, so consecutive rows scale by 10.
  CHECK(res.rows[1].T_H / res.rows[0].T_H == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(res.rows[2].T_H / res.rows[1].T_H == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(res.rows[0].T_H < res.rows[1].T_H);
  CHECK(res.rows[1].T_H < res.rows[2].T_H);

  SUBCASE("summary is byte-identical across reruns") {
    const auto dir2 = test_helpers::make_temp_dir("sweep_k2_rerun");
    const auto res2 = run_sweep(cfg, dir2);
    CHECK(test_helpers::read_file(res.summary_path) == test_helpers::read_file(res2.summary_path));
  }
  SUBCASE("concurrent sweep matches the serial summary") {
    auto cfg_jobs = cfg;
    cfg_jobs.sweep.jobs = 3;
    const auto dir3 = test_helpers::make_temp_dir("sweep_k2_jobs");
    const auto res3 = run_sweep(cfg_jobs, dir3);
    CHECK(test_helpers::read_file(res.summary_path) == test_helpers::read_file(res3.summary_path));
  }
}

TEST_CASE("single-value sweep matches the plain pipeline") {
  const auto dir = test_helpers::make_temp_dir("sweep_single");
  io::RunConfig cfg;
  cfg.sweep.present = true;
  cfg.sweep.parameter = "material.K2";
  cfg.sweep.values = {1e-4};
  const auto sweep_res = run_sweep(cfg, dir);
  REQUIRE(sweep_res.rows.size() == 1);

  const auto dir2 = test_helpers::make_temp_dir("sweep_single_ref");
  io::RunConfig plain;
  const auto ref = run_pipeline(plain, dir2, StageSelection::pipeline(plain));
  CHECK(sweep_res.rows[0].kappa_g == ref.horizon_piecewise->horizons.front().kappa_g);
  CHECK(sweep_res.rows[0].T_H == ref.horizon_piecewise->horizons.front().T_H);
}

TEST_CASE("per-run sweep failures land in the summary and do not abort") {
  const auto dir = test_helpers::make_temp_dir("sweep_fail");
  io::RunConfig cfg;
  cfg.sweep.present = true;
  cfg.sweep.parameter = "material.c0";
  cfg.sweep.values = {1000.0, -5.0, 2000.0};
  const auto res = run_sweep(cfg, dir);
  REQUIRE(res.rows.size() == 3);
  CHECK(res.rows[0].status == "ok");
  CHECK(res.rows[1].status != "ok");
  CHECK(res.rows[2].status == "ok");
}

TEST_CASE("sweep validation") {
  const auto dir = test_helpers::make_temp_dir("sweep_invalid");
  io::RunConfig cfg;
  CHECK_THROWS_AS(run_sweep(cfg, dir), ConfigError);  // no sweep section

  cfg.sweep.present = true;
  cfg.sweep.parameter = "material.nope";
  cfg.sweep.values = {1.0};
  CHECK_THROWS_AS(run_sweep(cfg, dir), ConfigError);

  cfg.sweep.parameter = "material.K2";
  cfg.sweep.values = {};
  CHECK_THROWS_AS(run_sweep(cfg, dir), ConfigError);
}
