#include "sawsim/spin.hpp"

#include <cmath>

#include "sawsim/errors.hpp"

namespace sawsim {

void require_valid(const SpinSystem& sys) {
  if (!(sys.delta_E > 0.0)) throw ValidationError("delta_E", "spin system: delta_E must be positive");
  if (sys.gamma_up < 0.0 || sys.gamma_down < 0.0)
    throw ValidationError("gamma", "spin system: rates must be non-negative");
  if (sys.p_up < 0.0 || sys.p_up > 1.0 || sys.p_down < 0.0 || sys.p_down > 1.0)
    throw ValidationError("populations", "spin system: populations must be in [0, 1]");
  if (std::abs(sys.p_up + sys.p_down - 1.0) > 1e-12)
    throw ValidationError("populations", "spin system: populations must sum to 1");
}

void require_valid(const ThermometerConfig& cfg) {
  if (!(cfg.B > 0.0)) throw ValidationError("B", "thermometer: magnetic field must be positive");
  if (cfg.g_factor < 0.0) throw ValidationError("g_factor", "thermometer: g-factor must be non-negative");
  if (cfg.substrate_gap < 0.0)
    throw ValidationError("substrate_gap", "thermometer: substrate gap must be non-negative");
  if (cfg.base_rate < 0.0) throw ValidationError("base_rate", "thermometer: base rate must be non-negative");
  if (!(cfg.phonon_speed > 0.0))
    throw ValidationError("phonon_speed", "thermometer: phonon speed must be positive");
}

double zeeman_splitting(const ThermometerConfig& cfg, const PhysicalConstants& pc) {
  // Lenient on B = 0: it yields delta_E = 0, which the spin-system invariant
  // rejects downstream. Negative fields make no sense for a magnitude.
  if (cfg.B < 0.0) throw ValidationError("B", "thermometer: magnetic field must be non-negative");
  if (cfg.g_factor < 0.0) throw ValidationError("g_factor", "thermometer: g-factor must be non-negative");
  return cfg.g_factor * pc.mu_B * cfg.B;
}

double suppression_factor(const ThermometerConfig& cfg, const PhysicalConstants& pc) {
  const double delta_E = zeeman_splitting(cfg, pc);
  // Phonon wavenumber fixed by energy conservation: k = delta_E/(hbar c).
  const double k = delta_E / (pc.hbar * cfg.phonon_speed);
  return std::exp(-2.0 * cfg.substrate_gap * k);
}

double resolved_base_rate(const ThermometerConfig& cfg, const PhysicalConstants& pc) {
  if (cfg.base_rate > 0.0) return cfg.base_rate;
  // Auto default: total rate of 1/s at low temperature for this field.
  return 1.0 / suppression_factor(cfg, pc);
}

std::pair<double, double> rates_at_temperature(const ThermometerConfig& cfg, double T,
                                               const PhysicalConstants& pc) {
  require_valid(cfg);  // strict here: delta_E = 0 would make the Bose factor blow up
  if (T < 0.0) throw ValidationError("T", "rates_at_temperature: temperature must be non-negative");
  const double delta_E = zeeman_splitting(cfg, pc);
  const double base = resolved_base_rate(cfg, pc) * suppression_factor(cfg, pc);
  double n_bose = 0.0;
  if (T > 0.0) {
    const double x = delta_E / (pc.k_B * T);
    // exp overflows for x > ~709; occupation is then exactly 0 in doubles.
    n_bose = x < 700.0 ? 1.0 / std::expm1(x) : 0.0;
  }
  return {base * (n_bose + 1.0), base * n_bose};
}

SpinSystem evolve(const SpinSystem& sys, double t) {
  require_valid(sys);
  if (t < 0.0) throw ValidationError("t", "evolve: time span must be non-negative");
  const double total = sys.gamma_up + sys.gamma_down;
  SpinSystem out = sys;
  if (total == 0.0 || t == 0.0) return out;
  const double p_ss = sys.gamma_down / total;
  out.p_up = p_ss + (sys.p_up - p_ss) * std::exp(-total * t);
  out.p_down = 1.0 - out.p_up;
  return out;
}

PopulationRatio steady_state_ratio(double T_H, double delta_E, const PhysicalConstants& pc) {
  if (!(T_H > 0.0)) throw ValidationError("T_H", "steady_state_ratio: temperature must be positive");
  if (!(delta_E >= 0.0)) throw ValidationError("delta_E", "steady_state_ratio: splitting must be >= 0");
  const double x = delta_E / (pc.k_B * T_H);
  PopulationRatio r;
  r.value = std::exp(-x);
  r.underflow = (r.value == 0.0 && x > 0.0);
  return r;
}

TemperatureEstimate infer_temperature(double r, double delta_E, const PhysicalConstants& pc) {
  if (!(r > 0.0) || !(r < 1.0))
    throw ValidationError("r", "infer_temperature: ratio must be inside (0, 1)");
  if (!(delta_E > 0.0)) throw ValidationError("delta_E", "infer_temperature: splitting must be positive");
  TemperatureEstimate est;
  est.T_H = -delta_E / (pc.k_B * std::log(r));
  est.sensitivity = delta_E / (pc.k_B * est.T_H);
  return est;
}

}  // namespace sawsim
