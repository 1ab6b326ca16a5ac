#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sawsim/grid.hpp"
#include "sawsim/materials.hpp"
#include "sawsim/spin.hpp"
#include "sawsim/wave.hpp"

namespace sawsim::io {

struct ObserverConfig {
  bool use_optimal = true;
  double v = 0.0;  // m/s, when use_optimal is false
};

struct WaveStageConfig {
  bool enabled = false;
  double cells_per_wavelength = 64.0;
  double n_wavelengths = 16.0;     // domain length in SAW wavelengths
  double cfl_safety = 0.995;
  Boundary boundary = Boundary::absorbing;
  double transit_fraction = 1.0;   // t_end as a fraction of one domain transit
  long probe_stride = 10;
};

struct RaysStageConfig {
  bool enabled = false;
  int count = 32;        // seeded rays, split between the two sides
  double t_folds = 12.0; // trace length in e-folds of the ramp rate
};

struct SweepConfig {
  bool present = false;
  std::string parameter;       // dotted numeric path, e.g. material.K2
  std::vector<double> values;  // in input order
  int jobs = 1;
};

struct OutputConfig {
  std::string directory;  // empty: resolved by the CLI (flag, env var, default)
  bool csv = true;
  bool json = true;
};

struct RunConfig {
  MaterialParams material = gaas_defaults();
  std::optional<double> grid_x_min;          // m
  std::optional<double> grid_x_max;          // m
  std::optional<std::size_t> grid_n_points;
  ObserverConfig observer;
  SolverConfig solver;
  ThermometerConfig thermometer;
  bool thermometer_g_explicit = false;  // otherwise inherits material.g_factor
  WaveStageConfig wave;
  RaysStageConfig rays;
  SweepConfig sweep;
  OutputConfig output;

  // Defaults: [-8/kappa_s, 8/kappa_s] with 1601 points (dx = 0.01/kappa_s).
  Grid1D resolved_grid() const;
  double resolved_observer_speed() const;
  ThermometerConfig resolved_thermometer() const;
};

// Strict parser: unknown sections or keys are hard errors (ConfigError names
// them). Full-line comments start with '#' or ';'.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::filesystem::path& path);

// Applies "section.key=value", the same path the file parser uses.
void apply_override(RunConfig& cfg, const std::string& assignment);

// Numeric scalar paths a sweep may target.
const std::vector<std::string>& sweep_parameter_paths();
bool is_sweep_path(const std::string& path);
void set_numeric(RunConfig& cfg, const std::string& path, double value);

// Deterministic INI echo of the resolved configuration.
std::string serialize_config(const RunConfig& cfg);

}  // namespace sawsim::io
