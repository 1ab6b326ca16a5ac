#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "sawsim/constants.hpp"
#include "sawsim/horizon.hpp"
#include "sawsim/spin.hpp"
#include "sawsim/speed.hpp"

namespace sawsim::io {

using ordered_json = nlohmann::ordered_json;

// HorizonReport as JSON with field names matching the type, an SI "units"
// sub-object, and a notes block (including the temperature-scale note the
// downstream analysis expects to find).
ordered_json horizon_report_json(const HorizonReport& report, SpeedProvenance provenance);

struct ThermoReport {
  double delta_E = 0.0;              // J
  double gamma_up = 0.0;             // 1/s
  double gamma_down = 0.0;           // 1/s
  double thermalization_time = 0.0;  // s
  std::optional<double> T_H = {};    // bath temperature driving the rates (K)
  double r = 0.0;                    // steady-state population ratio
  bool r_underflow = false;
  std::optional<double> T_H_inferred = {};  // from r, when r is in (0,1)
  std::optional<double> sensitivity = {};   // delta_E/(k_B T_H)
  bool measurable = false;                  // r inside [1e-6, 1-1e-6]
};

ThermoReport build_thermo_report(const ThermometerConfig& cfg, std::optional<double> T_H,
                                 const PhysicalConstants& pc = codata());

ordered_json thermo_report_json(const ThermoReport& report);

void write_json_file(const std::filesystem::path& path, const ordered_json& j);

}  // namespace sawsim::io
