#include "sawsim/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "sawsim/density.hpp"
#include "sawsim/errors.hpp"
#include "sawsim/rays.hpp"
#include "sawsim/version.hpp"
#include "sawsim/wave.hpp"

namespace sawsim {

namespace fs = std::filesystem;

namespace {

void check_writable(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("output: cannot create directory " + dir.string() + ": " + ec.message());
  const fs::path probe = dir / ".write_probe";
  try {
    io::write_text_file(probe, "ok\n");
  } catch (const Error&) {
    throw ConfigError("output: directory not writable: " + dir.string());
  }
  fs::remove(probe, ec);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string sanitize_status(std::string s) {
  for (auto& ch : s)
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  return s;
}

// Resample a speed profile onto a (usually much longer) wave grid; outside
// the source grid the endpoint values extend as constants.
SpeedProfile resample_speed(const SpeedProfile& src, const Grid1D& grid) {
  SpeedProfile out{grid, std::vector<double>(grid.size()), std::vector<double>(grid.size()),
                   src.provenance, src.iterations_used, src.residual, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.x(i);
    out.c[i] = src.c_at(x);
    out.dc_dx[i] = src.dc_dx_at(x);
  }
  return out;
}

class ArtifactSink {
 public:
  ArtifactSink(fs::path dir, std::vector<Artifact>& out) : dir_(std::move(dir)), out_(out) {}

  void add_text(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    io::write_text_file(path, content);
    record(name, path);
  }

  void add_json(const std::string& name, const io::ordered_json& j) {
    const fs::path path = dir_ / name;
    io::write_json_file(path, j);
    record(name, path);
  }

 private:
  void record(const std::string& name, const fs::path& path) {
    Artifact a;
    a.name = name;
    a.path = path;
    a.bytes = fs::file_size(path);
    a.checksum = io::fnv1a64_hex(path);
    out_.push_back(a);
  }

  fs::path dir_;
  std::vector<Artifact>& out_;
};

}  // namespace

PipelineResult run_pipeline(const io::RunConfig& cfg, const fs::path& out_dir,
                            const StageSelection& wanted) {
  const auto t_start = std::chrono::steady_clock::now();

  // Dependency closure.
  StageSelection stages = wanted;
  if (stages.thermo || stages.rays) stages.horizon = true;
  if (stages.horizon || stages.wave) stages.speed = true;
  if (stages.speed) stages.density = true;

  const auto& m = cfg.material;
  const auto validation = validate(m);
  if (!validation.ok()) {
    const auto& first = validation.errors.front();
    throw ConfigError("config: material." + first.field + ": " + first.message);
  }
  check_writable(out_dir);

  PipelineResult result;
  result.out_dir = out_dir;
  result.warnings = validation.warnings;
  ArtifactSink sink(out_dir, result.artifacts);

  io::ordered_json diag;
  const Grid1D grid = cfg.resolved_grid();
  const auto pc = codata();

  sink.add_text("resolved_config.ini", io::serialize_config(cfg));

  // Density stage: analytic profile plus closure diagnostics against the
  // numeric convolution when the grid admits it.
  std::optional<DensityProfile> density;
  if (stages.density) {
    density = smoothed_density(grid, m.kappa_s);
    if (cfg.output.csv) sink.add_text("density.csv", io::density_csv(*density));
    const double residual = charge_conservation(*density, grid);
    diag["charge_residual_times_kappa"] = residual * m.kappa_s;
    const bool convolvable = grid.x_min() <= -8.0 / m.kappa_s + grid.dx() * 1e-9 &&
                             grid.x_max() >= 8.0 / m.kappa_s - grid.dx() * 1e-9 &&
                             grid.dx() <= 0.1 / m.kappa_s * (1.0 + 1e-12);
    if (convolvable) {
      const auto convolved = convolve_density(grid, m.kappa_s);
      double max_dev = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i)
        max_dev = std::max(max_dev, std::abs(convolved.n[i] - density->n[i]));
      diag["density_closure_max_abs_dev"] = max_dev;
    } else {
      diag["density_closure_max_abs_dev"] = nullptr;
    }
  }

  // Speed stage: both provenances on the same grid.
  std::optional<SpeedProfile> speed_fp;
  std::optional<SpeedProfile> speed_pw;
  if (stages.speed) {
    speed_fp = solve_speed_fixed_point(*density, m);
    speed_pw = piecewise_speed(m, grid);
    if (cfg.output.csv) {
      sink.add_text("speed_fixed_point.csv", io::speed_csv(*speed_fp));
      sink.add_text("speed_piecewise.csv", io::speed_csv(*speed_pw));
    }
    const auto peak_fp = max_gradient(*speed_fp);
    const double slope_pw = ramp_slope(m);
    diag["fixed_point"] = {{"iterations_used", speed_fp->iterations_used},
                           {"residual", speed_fp->residual},
                           {"max_gradient", peak_fp.slope},
                           {"max_gradient_x", peak_fp.x_at}};
    diag["piecewise_max_gradient"] = slope_pw;
    diag["gradient_ratio"] = slope_pw > 0.0 ? peak_fp.slope / slope_pw : 0.0;
  }

  const double v = cfg.resolved_observer_speed();
  if (stages.horizon) {
    if (!(v > 0.0)) throw ConfigError("config: observer.v must be positive");
    result.horizon_piecewise = find_horizons(*speed_pw, v, pc);
    result.horizon_fixed_point = find_horizons(*speed_fp, v, pc);
    if (cfg.output.json) {
      sink.add_json("horizon_piecewise.json",
                    io::horizon_report_json(*result.horizon_piecewise, SpeedProvenance::piecewise));
      sink.add_json("horizon_fixed_point.json",
                    io::horizon_report_json(*result.horizon_fixed_point, SpeedProvenance::fixed_point));
    }
    diag["observer_speed"] = v;
    diag["horizons_piecewise"] = result.horizon_piecewise->horizons.size();
    diag["horizons_fixed_point"] = result.horizon_fixed_point->horizons.size();
  }

  if (stages.wave) {
    const double wavelength = 2.0 * std::numbers::pi * m.c0 / m.omega;
    const double length = cfg.wave.n_wavelengths * wavelength;
    const auto n_cells =
        static_cast<std::size_t>(cfg.wave.n_wavelengths * cfg.wave.cells_per_wavelength);
    const Grid1D wave_grid(-0.5 * length, 0.5 * length, n_cells + 1);
    const SpeedProfile wave_speed = resample_speed(*speed_fp, wave_grid);

    SolverConfig solver = cfg.solver;
    solver.boundary = cfg.wave.boundary;
    solver.cfl_safety = cfg.wave.cfl_safety;
    solver.dt = 0.0;

    const double x0 = -0.25 * length;
    const double width = 2.0 * wavelength;
    auto u0 = [&](double x) { return std::exp(-((x - x0) / width) * ((x - x0) / width)); };
    auto v0 = [&](double x) {
      const double du = -2.0 * (x - x0) / (width * width) * u0(x);
      return -wave_speed.c_at(x) * du;  // right-moving pulse
    };
    WaveField wf = init_wave_field(wave_grid, u0, v0, wave_speed, solver);
    const double e0 = energy(wf, wave_speed);
    const double t_end = cfg.wave.transit_fraction * length / m.c0;
    ProbeSpec probes{{-0.25 * length, 0.0, 0.25 * length}, cfg.wave.probe_stride};
    const RunResult run_result = run(wf, wave_speed, solver, t_end, probes);
    const double e1 = energy(run_result.field, wave_speed);

    if (cfg.output.csv) {
      std::vector<std::string> meta = {
          "boundary = " + to_string(solver.boundary),
          "dt = " + io::format_double(run_result.field.dt),
          "cfl_safety = " + io::format_double(solver.cfl_safety),
          "steps = " + std::to_string(run_result.field.step_count)};
      sink.add_text("wave_probes.csv", io::probes_csv(run_result.probes, meta));
    }
    diag["wave"] = {{"steps", run_result.field.step_count},
                    {"dt", run_result.field.dt},
                    {"energy_initial", e0},
                    {"energy_final", e1}};
  }

  if (stages.rays) {
    if (!result.horizon_piecewise->horizons.empty()) {
      const double x_h = result.horizon_piecewise->horizons.front().x_h;
      const double slope = ramp_slope(m);
      const double edge = 2.0 / m.kappa_s;
      const double t_end = slope > 0.0 ? cfg.rays.t_folds / slope : 1.0;

      std::vector<RayTrace> traces;
      int trapped = 0, escaped = 0;
      const int per_side = std::max(1, cfg.rays.count / 2);
      for (int side = -1; side <= 1; side += 2) {
        for (int k = 0; k < per_side; ++k) {
          const double frac = (k + 1) / static_cast<double>(per_side + 1);
          const double xi0 = x_h + side * frac * 0.95 * edge;
          auto trace = trace_characteristic(*speed_pw, result.horizon_piecewise->observer_speed,
                                            xi0, +1, t_end);
          const double last = trace.xi.back();
          if (side < 0 && last < x_h) ++trapped;
          if (side > 0 && (last > x_h + edge || trace.truncated)) ++escaped;
          traces.push_back(std::move(trace));
        }
      }
      if (cfg.output.csv) {
        std::vector<std::string> meta = {"profile = piecewise",
                                         "observer_speed = " + io::format_double(v),
                                         "x_h = " + io::format_double(x_h)};
        sink.add_text("rays.csv", io::traces_csv(traces, meta));
      }

      // Peel-off rate from a ray seeded just outside the horizon.
      io::ordered_json fit_diag;
      try {
        auto probe = trace_characteristic(*speed_pw, result.horizon_piecewise->observer_speed,
                                          x_h + 1e-3 * edge, +1, t_end);
        FitOptions fopt;
        fopt.window_max = 0.9 * edge;
        const auto fit = fit_horizon_exponent(probe, x_h, fopt);
        fit_diag = {{"exponent", fit.slope},
                    {"ramp_slope", slope},
                    {"relative_deviation", std::abs(fit.slope - slope) / slope}};
      } catch (const FitError& e) {
        fit_diag = {{"error", e.what()}};
      }
      diag["rays"] = {{"count", static_cast<int>(traces.size())},
                      {"trapped_inside", trapped},
                      {"escaped_outside", escaped},
                      {"exponent_fit", fit_diag}};
    } else {
      diag["rays"] = {{"skipped", "no horizon at this observer speed"}};
    }
  }

  if (stages.thermo) {
    const auto thermo_cfg = cfg.resolved_thermometer();
    require_valid(thermo_cfg);
    std::optional<double> T_H;
    if (!result.horizon_piecewise->horizons.empty())
      T_H = result.horizon_piecewise->horizons.front().T_H;
    const auto report = io::build_thermo_report(thermo_cfg, T_H, pc);
    if (cfg.output.json) sink.add_json("thermo.json", io::thermo_report_json(report));

    if (cfg.output.csv && report.gamma_up + report.gamma_down > 0.0) {
      SpinSystem sys{report.delta_E, report.gamma_up, report.gamma_down, 1.0, 0.0};
      const double horizon_span = 5.0 * report.thermalization_time;
      std::vector<double> ts, ups;
      const int samples = 101;
      for (int k = 0; k < samples; ++k) {
        const double t = horizon_span * k / (samples - 1);
        ts.push_back(t);
        ups.push_back(evolve(sys, t).p_up);
      }
      std::vector<std::string> meta = {"delta_E = " + io::format_double(report.delta_E),
                                       "gamma_up = " + io::format_double(report.gamma_up),
                                       "gamma_down = " + io::format_double(report.gamma_down)};
      sink.add_text("populations.csv", io::populations_csv(ts, ups, meta));
    }
    diag["thermalization_time"] = report.thermalization_time;
    if (T_H) diag["T_H_piecewise"] = *T_H;
  }

  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

  io::ordered_json manifest;
  manifest["tool"] = {{"name", "sawsim"}, {"version", kVersion}};
  manifest["created_utc"] = utc_timestamp();  // timestamps live only in the manifest
  manifest["elapsed_seconds"] = elapsed;
  manifest["material"] = m.name;
  manifest["artifacts"] = io::ordered_json::array();
  for (const auto& a : result.artifacts)
    manifest["artifacts"].push_back(
        {{"name", a.name}, {"bytes", a.bytes}, {"fnv1a64", a.checksum}});
  manifest["diagnostics"] = diag;
  io::write_json_file(out_dir / "manifest.json", manifest);
  result.manifest = manifest;
  return result;
}

SweepResult run_sweep(const io::RunConfig& cfg, const fs::path& out_root) {
  if (!cfg.sweep.present) throw ConfigError("sweep: no [sweep] section in the configuration");
  if (cfg.sweep.parameter.empty()) throw ConfigError("sweep: parameter path missing");
  if (!io::is_sweep_path(cfg.sweep.parameter))
    throw ConfigError("sweep: unknown parameter path '" + cfg.sweep.parameter + "'");
  if (cfg.sweep.values.empty()) throw ConfigError("sweep: values list is empty");
  for (const double value : cfg.sweep.values)
    if (!std::isfinite(value)) throw ConfigError("sweep: values must be finite");
  check_writable(out_root);

  const std::size_t n = cfg.sweep.values.size();
  std::vector<io::SweepRow> rows(n);

  auto run_one = [&](std::size_t i) {
    io::SweepRow row;
    row.value = cfg.sweep.values[i];
    char name[32];
    std::snprintf(name, sizeof(name), "run_%03zu", i);
    const fs::path dir = out_root / name;
    try {
      io::RunConfig sub = cfg;
      sub.sweep = io::SweepConfig{};
      io::set_numeric(sub, cfg.sweep.parameter, cfg.sweep.values[i]);
      const auto res = run_pipeline(sub, dir, StageSelection::pipeline(sub));
      row.status = "ok";
      row.horizon_count = static_cast<int>(res.horizon_piecewise->horizons.size());
      if (row.horizon_count > 0) {
        row.kappa_g = res.horizon_piecewise->horizons.front().kappa_g;
        row.T_H = res.horizon_piecewise->horizons.front().T_H;
      }
    } catch (const std::exception& e) {
      row.status = sanitize_status(e.what());
    }
    rows[i] = std::move(row);
  };

  const int jobs = std::max(1, cfg.sweep.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int count = std::min<std::size_t>(jobs, n);
    workers.reserve(count);
    for (int w = 0; w < count; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) run_one(i);
      });
    for (auto& t : workers) t.join();
  }

  SweepResult result;
  result.rows = rows;
  result.summary_path = out_root / "sweep.csv";
  io::write_text_file(result.summary_path, io::sweep_csv(cfg.sweep.parameter, rows));
  return result;
}

}  // namespace sawsim
