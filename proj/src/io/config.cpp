#include "sawsim/io/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sawsim/errors.hpp"
#include "sawsim/horizon.hpp"
#include "sawsim/io/csv.hpp"

namespace sawsim::io {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_double(const std::string& where, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("config: " + where + ": not a number: '" + value + "'");
  return out;
}

long parse_long(const std::string& where, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const long out = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("config: " + where + ": not an integer: '" + value + "'");
  return out;
}

bool parse_bool(const std::string& where, const std::string& value) {
  const std::string v = lower(trim(value));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config: " + where + ": not a boolean: '" + value + "'");
}

Boundary parse_boundary(const std::string& where, const std::string& value) {
  const std::string v = lower(trim(value));
  if (v == "periodic") return Boundary::periodic;
  if (v == "reflecting") return Boundary::reflecting;
  if (v == "absorbing") return Boundary::absorbing;
  throw ConfigError("config: " + where + ": unknown boundary '" + value +
                    "' (periodic|reflecting|absorbing)");
}

std::vector<double> parse_double_list(const std::string& where, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_double(where, item));
  }
  return out;
}

void apply_material(RunConfig& cfg, const std::string& key, const std::string& value,
                    const std::string& where) {
  auto& m = cfg.material;
  if (key == "preset") {
    const std::string v = lower(trim(value));
    if (v != "gaas") throw ConfigError("config: " + where + ": unknown preset '" + value + "'");
    m = gaas_defaults();
  } else if (key == "name") {
    m.name = trim(value);
  } else if (key == "c0") {
    m.c0 = parse_double(where, value);
  } else if (key == "k2") {
    m.K2 = parse_double(where, value);
  } else if (key == "kappa_s") {
    m.kappa_s = parse_double(where, value);
  } else if (key == "sigma") {
    m.sigma = parse_double(where, value);
  } else if (key == "omega") {
    m.omega = parse_double(where, value);
  } else if (key == "n_max") {
    m.n_max = parse_double(where, value);
  } else if (key == "g_factor") {
    m.g_factor = parse_double(where, value);
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_grid(RunConfig& cfg, const std::string& key, const std::string& value,
                const std::string& where) {
  if (key == "x_min") {
    cfg.grid_x_min = parse_double(where, value);
  } else if (key == "x_max") {
    cfg.grid_x_max = parse_double(where, value);
  } else if (key == "n_points") {
    const long n = parse_long(where, value);
    if (n < 3) throw ConfigError("config: " + where + ": need at least 3 points");
    cfg.grid_n_points = static_cast<std::size_t>(n);
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_observer(RunConfig& cfg, const std::string& key, const std::string& value,
                    const std::string& where) {
  if (key == "v") {
    if (lower(trim(value)) == "optimal") {
      cfg.observer.use_optimal = true;
    } else {
      cfg.observer.use_optimal = false;
      cfg.observer.v = parse_double(where, value);
    }
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_solver(RunConfig& cfg, const std::string& key, const std::string& value,
                  const std::string& where) {
  if (key == "dt") {
    cfg.solver.dt = parse_double(where, value);
  } else if (key == "cfl_safety") {
    cfg.solver.cfl_safety = parse_double(where, value);
  } else if (key == "boundary") {
    cfg.solver.boundary = parse_boundary(where, value);
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_thermometer(RunConfig& cfg, const std::string& key, const std::string& value,
                       const std::string& where) {
  auto& t = cfg.thermometer;
  if (key == "b") {
    t.B = parse_double(where, value);
  } else if (key == "g_factor") {
    t.g_factor = parse_double(where, value);
    cfg.thermometer_g_explicit = true;
  } else if (key == "substrate_gap") {
    t.substrate_gap = parse_double(where, value);
  } else if (key == "base_rate") {
    if (lower(trim(value)) == "auto")
      t.base_rate = 0.0;
    else
      t.base_rate = parse_double(where, value);
  } else if (key == "phonon_speed") {
    t.phonon_speed = parse_double(where, value);
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_wave(RunConfig& cfg, const std::string& key, const std::string& value,
                const std::string& where) {
  auto& w = cfg.wave;
  if (key == "enabled") {
    w.enabled = parse_bool(where, value);
  } else if (key == "cells_per_wavelength") {
    w.cells_per_wavelength = parse_double(where, value);
  } else if (key == "n_wavelengths") {
    w.n_wavelengths = parse_double(where, value);
  } else if (key == "cfl_safety") {
    w.cfl_safety = parse_double(where, value);
  } else if (key == "boundary") {
    w.boundary = parse_boundary(where, value);
  } else if (key == "transit_fraction") {
    w.transit_fraction = parse_double(where, value);
  } else if (key == "probe_stride") {
    w.probe_stride = parse_long(where, value);
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_rays(RunConfig& cfg, const std::string& key, const std::string& value,
                const std::string& where) {
  auto& r = cfg.rays;
  if (key == "enabled") {
    r.enabled = parse_bool(where, value);
  } else if (key == "count") {
    r.count = static_cast<int>(parse_long(where, value));
    if (r.count < 1) throw ConfigError("config: " + where + ": need at least 1 ray");
  } else if (key == "t_folds") {
    r.t_folds = parse_double(where, value);
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_sweep(RunConfig& cfg, const std::string& key, const std::string& value,
                 const std::string& where) {
  auto& s = cfg.sweep;
  s.present = true;
  if (key == "parameter") {
    s.parameter = trim(value);
  } else if (key == "values") {
    s.values = parse_double_list(where, value);
  } else if (key == "jobs") {
    s.jobs = static_cast<int>(parse_long(where, value));
    if (s.jobs < 1) throw ConfigError("config: " + where + ": jobs must be >= 1");
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_output(RunConfig& cfg, const std::string& key, const std::string& value,
                  const std::string& where) {
  auto& o = cfg.output;
  if (key == "directory") {
    o.directory = trim(value);
  } else if (key == "formats") {
    o.csv = false;
    o.json = false;
    std::stringstream ss(lower(value));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string f = trim(item);
      if (f == "csv")
        o.csv = true;
      else if (f == "json")
        o.json = true;
      else if (!f.empty())
        throw ConfigError("config: " + where + ": unknown format '" + f + "'");
    }
  } else {
    throw ConfigError("config: unknown key '" + where + "'");
  }
}

void apply_kv(RunConfig& cfg, const std::string& section, const std::string& raw_key,
              const std::string& value) {
  const std::string key = lower(trim(raw_key));
  const std::string where = section + "." + key;
  if (section == "material")
    apply_material(cfg, key, value, where);
  else if (section == "grid")
    apply_grid(cfg, key, value, where);
  else if (section == "observer")
    apply_observer(cfg, key, value, where);
  else if (section == "solver")
    apply_solver(cfg, key, value, where);
  else if (section == "thermometer")
    apply_thermometer(cfg, key, value, where);
  else if (section == "wave")
    apply_wave(cfg, key, value, where);
  else if (section == "rays")
    apply_rays(cfg, key, value, where);
  else if (section == "sweep")
    apply_sweep(cfg, key, value, where);
  else if (section == "output")
    apply_output(cfg, key, value, where);
  else
    throw ConfigError("config: unknown section '" + section + "'");
}

}  // namespace

Grid1D RunConfig::resolved_grid() const {
  const double span = 8.0 / material.kappa_s;
  const double x_min = grid_x_min.value_or(-span);
  const double x_max = grid_x_max.value_or(span);
  const std::size_t n = grid_n_points.value_or(1601);
  return Grid1D(x_min, x_max, n);
}

double RunConfig::resolved_observer_speed() const {
  return observer.use_optimal ? optimal_observer_speed(material) : observer.v;
}

ThermometerConfig RunConfig::resolved_thermometer() const {
  ThermometerConfig t = thermometer;
  if (!thermometer_g_explicit) t.g_factor = material.g_factor;
  return t;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
    if (stripped.front() == '[') {
      if (stripped.back() != ']')
        throw ConfigError("config: line " + std::to_string(line_no) + ": malformed section header");
      section = lower(trim(stripped.substr(1, stripped.size() - 2)));
      if (section.empty())
        throw ConfigError("config: line " + std::to_string(line_no) + ": empty section name");
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(line_no) + ": expected key = value");
    if (section.empty())
      throw ConfigError("config: line " + std::to_string(line_no) + ": key outside any section");
    apply_kv(cfg, section, stripped.substr(0, eq), trim(stripped.substr(eq + 1)));
  }
  return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override: expected section.key=value, got '" + assignment + "'");
  const std::string path = trim(assignment.substr(0, eq));
  const auto dot = path.find('.');
  if (dot == std::string::npos)
    throw ConfigError("override: expected section.key=value, got '" + assignment + "'");
  apply_kv(cfg, lower(path.substr(0, dot)), path.substr(dot + 1), trim(assignment.substr(eq + 1)));
}

const std::vector<std::string>& sweep_parameter_paths() {
  static const std::vector<std::string> paths = {
      "material.c0",          "material.k2",          "material.kappa_s",
      "material.sigma",       "material.omega",       "material.n_max",
      "material.g_factor",    "observer.v",           "solver.dt",
      "solver.cfl_safety",    "thermometer.b",        "thermometer.g_factor",
      "thermometer.substrate_gap", "thermometer.base_rate", "thermometer.phonon_speed"};
  return paths;
}

bool is_sweep_path(const std::string& path) {
  const std::string p = lower(path);
  const auto& all = sweep_parameter_paths();
  return std::find(all.begin(), all.end(), p) != all.end();
}

void set_numeric(RunConfig& cfg, const std::string& path, double value) {
  if (!is_sweep_path(path)) throw ConfigError("config: unknown parameter path '" + path + "'");
  const std::string p = lower(path);
  const auto dot = p.find('.');
  apply_kv(cfg, p.substr(0, dot), p.substr(dot + 1), format_double(value));
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  const auto d = [](double v) { return format_double(v); };
  os << "[material]\n";
  os << "name = " << cfg.material.name << "\n";
  os << "c0 = " << d(cfg.material.c0) << "\n";
  os << "K2 = " << d(cfg.material.K2) << "\n";
  os << "kappa_s = " << d(cfg.material.kappa_s) << "\n";
  os << "sigma = " << d(cfg.material.sigma) << "\n";
  os << "omega = " << d(cfg.material.omega) << "\n";
  os << "n_max = " << d(cfg.material.n_max) << "\n";
  os << "g_factor = " << d(cfg.material.g_factor) << "\n";
  const auto grid = cfg.resolved_grid();
  os << "\n[grid]\n";
  os << "x_min = " << d(grid.x_min()) << "\n";
  os << "x_max = " << d(grid.x_max()) << "\n";
  os << "n_points = " << grid.size() << "\n";
  os << "\n[observer]\n";
  os << "v = ";
  if (cfg.observer.use_optimal)
    os << "optimal\n";
  else
    os << d(cfg.observer.v) << "\n";
  os << "\n[solver]\n";
  os << "dt = " << d(cfg.solver.dt) << "\n";
  os << "cfl_safety = " << d(cfg.solver.cfl_safety) << "\n";
  os << "boundary = " << to_string(cfg.solver.boundary) << "\n";
  const auto thermo = cfg.resolved_thermometer();
  os << "\n[thermometer]\n";
  os << "B = " << d(thermo.B) << "\n";
  os << "g_factor = " << d(thermo.g_factor) << "\n";
  os << "substrate_gap = " << d(thermo.substrate_gap) << "\n";
  os << "base_rate = ";
  if (thermo.base_rate == 0.0)
    os << "auto\n";
  else
    os << d(thermo.base_rate) << "\n";
  os << "phonon_speed = " << d(thermo.phonon_speed) << "\n";
  os << "\n[wave]\n";
  os << "enabled = " << (cfg.wave.enabled ? "true" : "false") << "\n";
  os << "cells_per_wavelength = " << d(cfg.wave.cells_per_wavelength) << "\n";
  os << "n_wavelengths = " << d(cfg.wave.n_wavelengths) << "\n";
  os << "cfl_safety = " << d(cfg.wave.cfl_safety) << "\n";
  os << "boundary = " << to_string(cfg.wave.boundary) << "\n";
  os << "transit_fraction = " << d(cfg.wave.transit_fraction) << "\n";
  os << "probe_stride = " << cfg.wave.probe_stride << "\n";
  os << "\n[rays]\n";
  os << "enabled = " << (cfg.rays.enabled ? "true" : "false") << "\n";
  os << "count = " << cfg.rays.count << "\n";
  os << "t_folds = " << d(cfg.rays.t_folds) << "\n";
  if (cfg.sweep.present) {
    os << "\n[sweep]\n";
    os << "parameter = " << cfg.sweep.parameter << "\n";
    os << "values = ";
    for (std::size_t i = 0; i < cfg.sweep.values.size(); ++i)
      os << (i ? ", " : "") << d(cfg.sweep.values[i]);
    os << "\n";
    os << "jobs = " << cfg.sweep.jobs << "\n";
  }
  os << "\n[output]\n";
  if (!cfg.output.directory.empty()) os << "directory = " << cfg.output.directory << "\n";
  os << "formats = ";
  if (cfg.output.csv && cfg.output.json)
    os << "csv,json\n";
  else if (cfg.output.csv)
    os << "csv\n";
  else
    os << "json\n";
  return os.str();
}

}  // namespace sawsim::io
