// sawsim: gate-modulated SAW speed profiles, acoustic horizons for a comoving
// observer, characteristic tracing, and a two-level spin thermometer, driven
// by a single config file. Subcommands select how much of the chain to run.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sawsim/errors.hpp"
#include "sawsim/io/config.hpp"
#include "sawsim/io/csv.hpp"
#include "sawsim/pipeline.hpp"
#include "sawsim/version.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOpts {
  std::string config_path;
  std::string output_dir;
  std::vector<std::string> overrides;
  int jobs = 0;
};

sawsim::io::RunConfig load_config(const CommonOpts& opts) {
  sawsim::io::RunConfig cfg;
  if (!opts.config_path.empty()) cfg = sawsim::io::parse_config_file(opts.config_path);
  for (const auto& assignment : opts.overrides) sawsim::io::apply_override(cfg, assignment);
  if (opts.jobs > 0) cfg.sweep.jobs = opts.jobs;
  return cfg;
}

fs::path resolve_output_dir(const sawsim::io::RunConfig& cfg, const CommonOpts& opts) {
  if (!opts.output_dir.empty()) return opts.output_dir;
  if (!cfg.output.directory.empty()) return cfg.output.directory;
  if (const char* root = std::getenv("SAWSIM_OUTPUT_ROOT"); root && *root)
    return fs::path(root) / "run";
  return "sawsim_out";
}

void print_summary(const sawsim::PipelineResult& res) {
  for (const auto& w : res.warnings)
    std::cerr << "warning: material." << w.field << ": " << w.message << "\n";
  std::cout << "wrote " << res.artifacts.size() + 1 << " artifacts to " << res.out_dir.string()
            << "\n";
  if (res.horizon_piecewise) {
    const auto& hp = *res.horizon_piecewise;
    std::cout << "observer speed v = " << sawsim::io::format_double(hp.observer_speed)
              << " m/s\n";
    std::cout << "piecewise horizons: " << hp.horizons.size();
    for (const auto& h : hp.horizons)
      std::cout << "  [x_h = " << sawsim::io::format_double(h.x_h)
                << " m, kappa_g = " << sawsim::io::format_double(h.kappa_g)
                << " 1/s, T_H = " << sawsim::io::format_double(h.T_H) << " K]";
    std::cout << "\n";
  }
  if (res.horizon_fixed_point) {
    const auto& hf = *res.horizon_fixed_point;
    std::cout << "fixed-point horizons: " << hf.horizons.size();
    for (const auto& h : hf.horizons)
      std::cout << "  [x_h = " << sawsim::io::format_double(h.x_h)
                << " m, kappa_g = " << sawsim::io::format_double(h.kappa_g)
                << " 1/s, T_H = " << sawsim::io::format_double(h.T_H) << " K]";
    std::cout << "\n";
  }
}

int run_stages(const CommonOpts& opts, bool force_wave, bool force_rays,
               const sawsim::StageSelection& base) {
  const auto cfg = load_config(opts);
  auto stages = base;
  if (force_wave) stages.wave = true;
  if (force_rays) stages.rays = true;
  const auto res = sawsim::run_pipeline(cfg, resolve_output_dir(cfg, opts), stages);
  print_summary(res);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acoustic-horizon SAW simulator"};
  app.set_version_flag("--version", std::string("sawsim ") + sawsim::kVersion);
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("-c,--config", opts.config_path, "configuration file (INI)");
  app.add_option("-o,--output", opts.output_dir, "output directory");
  app.add_option("--set", opts.overrides, "override a config value: section.key=value")
      ->take_all();
  app.add_option("--jobs", opts.jobs, "concurrent sweep runs");

  auto* cmd_density = app.add_subcommand("density", "2DEG density profile");
  auto* cmd_speed = app.add_subcommand("speed", "SAW speed profiles (full solve and ramp)");
  auto* cmd_horizon = app.add_subcommand("horizon", "horizon report for the observer");
  auto* cmd_wave = app.add_subcommand("wave", "wave-equation run with probes");
  auto* cmd_rays = app.add_subcommand("rays", "characteristic traces around the horizon");
  auto* cmd_thermo = app.add_subcommand("thermo", "spin-thermometer report");
  auto* cmd_pipeline = app.add_subcommand("pipeline", "full chain");
  auto* cmd_sweep = app.add_subcommand("sweep", "parameter sweep of the full chain");

  // Global options may appear after the subcommand name.
  for (auto* sub : {cmd_density, cmd_speed, cmd_horizon, cmd_wave, cmd_rays, cmd_thermo,
                    cmd_pipeline, cmd_sweep})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_density->parsed())
      return run_stages(opts, false, false, {.density = true});
    if (cmd_speed->parsed())
      return run_stages(opts, false, false, {.density = true, .speed = true});
    if (cmd_horizon->parsed())
      return run_stages(opts, false, false, {.density = true, .speed = true, .horizon = true});
    if (cmd_wave->parsed())
      return run_stages(opts, true, false, {.density = true, .speed = true});
    if (cmd_rays->parsed())
      return run_stages(opts, false, true,
                        {.density = true, .speed = true, .horizon = true});
    if (cmd_thermo->parsed())
      return run_stages(opts, false, false,
                        {.density = true, .speed = true, .horizon = true, .thermo = true});
    if (cmd_pipeline->parsed()) {
      const auto cfg = load_config(opts);
      const auto res = sawsim::run_pipeline(cfg, resolve_output_dir(cfg, opts),
                                            sawsim::StageSelection::pipeline(cfg));
      print_summary(res);
      return 0;
    }
    if (cmd_sweep->parsed()) {
      const auto cfg = load_config(opts);
      const auto res = sawsim::run_sweep(cfg, resolve_output_dir(cfg, opts));
      std::cout << "sweep summary: " << res.summary_path.string() << "\n";
      for (const auto& row : res.rows)
        std::cout << sawsim::io::format_double(row.value) << " -> " << row.status << "\n";
      return 0;
    }
  } catch (const sawsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
