#include "sawsim/io/reports.hpp"

#include <fstream>

#include "sawsim/errors.hpp"
#include "sawsim/io/csv.hpp"

namespace sawsim::io {

namespace {

// The mK-order estimate circulating for GaAs devices of this kind is not
// what the implemented formulas give; the report carries the computed value
// and says so explicitly so downstream consumers do not "correct" it.
constexpr const char* kTemperatureScaleNote =
    "Direct evaluation of T_H = hbar*kappa_g/(2*pi*k_B) with the ramp gradient "
    "kappa_g = kappa_s*K2*c0/8 at GaAs-like constants (kappa_s=1e9 1/m, K2=1e-4, "
    "c0=1e3 m/s) gives T_H ~ 1.5e-5 K. The mK-order figure sometimes quoted for "
    "this configuration is not reproduced by these formulas at these constants; "
    "the computed value is reported as-is.";

}  // namespace

ordered_json horizon_report_json(const HorizonReport& report, SpeedProvenance provenance) {
  ordered_json j;
  j["observer_speed"] = report.observer_speed;
  j["provenance"] = to_string(provenance);
  j["horizons"] = ordered_json::array();
  for (const auto& h : report.horizons) {
    ordered_json hj;
    hj["x_h"] = h.x_h;
    hj["kappa_g"] = h.kappa_g;
    hj["T_H"] = h.T_H;
    hj["crossing"] = to_string(h.crossing);
    j["horizons"].push_back(hj);
  }
  j["metric_coefficient"] = report.metric_coefficient;
  j["units"] = {{"observer_speed", "m/s"},
                {"x_h", "m"},
                {"kappa_g", "1/s"},
                {"T_H", "K"},
                {"metric_coefficient", "m^2/s^2"}};
  j["notes"] = {{"metric_coefficient", "g_tt(x) = -(c^2(x) - v^2), sampled on the profile grid"},
                {"temperature_scale", kTemperatureScaleNote}};
  return j;
}

ThermoReport build_thermo_report(const ThermometerConfig& cfg, std::optional<double> T_H,
                                 const PhysicalConstants& pc) {
  ThermoReport rep;
  rep.delta_E = zeeman_splitting(cfg, pc);
  rep.T_H = T_H;
  const double T = T_H.value_or(0.0);
  const auto [up, down] = rates_at_temperature(cfg, T, pc);
  rep.gamma_up = up;
  rep.gamma_down = down;
  rep.thermalization_time = (up + down) > 0.0 ? 1.0 / (up + down) : 0.0;
  if (T_H && *T_H > 0.0) {
    const auto ratio = steady_state_ratio(*T_H, rep.delta_E, pc);
    rep.r = ratio.value;
    rep.r_underflow = ratio.underflow;
    rep.sensitivity = rep.delta_E / (pc.k_B * *T_H);
    if (ratio.value > 0.0 && ratio.value < 1.0) {
      rep.T_H_inferred = infer_temperature(ratio.value, rep.delta_E, pc).T_H;
    }
    rep.measurable = ratio.value >= 1e-6 && ratio.value <= 1.0 - 1e-6;
  }
  return rep;
}

ordered_json thermo_report_json(const ThermoReport& report) {
  ordered_json j;
  j["delta_E"] = report.delta_E;
  j["gamma_up"] = report.gamma_up;
  j["gamma_down"] = report.gamma_down;
  j["thermalization_time"] = report.thermalization_time;
  if (report.T_H)
    j["T_H"] = *report.T_H;
  else
    j["T_H"] = nullptr;
  j["r"] = report.r;
  j["r_underflow"] = report.r_underflow;
  if (report.T_H_inferred)
    j["T_H_inferred"] = *report.T_H_inferred;
  else
    j["T_H_inferred"] = nullptr;
  if (report.sensitivity)
    j["sensitivity"] = *report.sensitivity;
  else
    j["sensitivity"] = nullptr;
  j["measurable"] = report.measurable;
  j["measurability_window"] = {{"r_min", 1e-6}, {"r_max", 1.0 - 1e-6}};
  j["units"] = {{"delta_E", "J"},
                {"gamma_up", "1/s"},
                {"gamma_down", "1/s"},
                {"thermalization_time", "s"},
                {"T_H", "K"},
                {"T_H_inferred", "K"},
                {"sensitivity", "dimensionless: |dr/r| per dT_H/T_H"}};
  j["notes"] = {{"r", "steady-state ratio p_up/p_down = exp(-delta_E/(k_B T_H)); reported 0 with "
                      "r_underflow=true when the exponent is beyond double range"},
                {"measurable", "true when r lies inside the measurability window"}};
  return j;
}

void write_json_file(const std::filesystem::path& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace sawsim::io
