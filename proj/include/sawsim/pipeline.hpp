#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sawsim/horizon.hpp"
#include "sawsim/io/config.hpp"
#include "sawsim/io/csv.hpp"
#include "sawsim/io/reports.hpp"

namespace sawsim {

// Which stages a subcommand wants. Upstream dependencies are enabled
// automatically (speed needs density, horizon needs speed, ...).
struct StageSelection {
  bool density = false;
  bool speed = false;
  bool horizon = false;
  bool wave = false;
  bool rays = false;
  bool thermo = false;

  static StageSelection pipeline(const io::RunConfig& cfg) {
    return {true, true, true, cfg.wave.enabled, cfg.rays.enabled, true};
  }
};

struct Artifact {
  std::string name;
  std::filesystem::path path;
  std::uintmax_t bytes = 0;
  std::string checksum;  // fnv1a64
};

struct PipelineResult {
  std::filesystem::path out_dir;
  std::vector<Artifact> artifacts;
  std::vector<ValidationIssue> warnings;
  std::optional<HorizonReport> horizon_piecewise;
  std::optional<HorizonReport> horizon_fixed_point;
  io::ordered_json manifest;
};

// Runs the selected stages, writes every emitter's file plus manifest.json
// into out_dir. Throws ConfigError for bad configuration (exit status 2 at
// the CLI), other sawsim errors for model failures (exit status 1).
PipelineResult run_pipeline(const io::RunConfig& cfg, const std::filesystem::path& out_dir,
                            const StageSelection& stages);

struct SweepResult {
  std::filesystem::path summary_path;
  std::vector<io::SweepRow> rows;
};

// One pipeline run per sweep value in its own subdirectory; per-run failures
// land in the summary row instead of aborting the remaining runs. Runs
// execute concurrently up to cfg.sweep.jobs.
SweepResult run_sweep(const io::RunConfig& cfg, const std::filesystem::path& out_root);

}  // namespace sawsim
