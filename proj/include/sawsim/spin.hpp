#pragma once

#include <utility>

#include "sawsim/constants.hpp"

namespace sawsim {

// Two-level electron spin in a comoving dynamic quantum dot: Zeeman-split
// states thermalizing through piezophonon emission/absorption.
struct SpinSystem {
  double delta_E = 0.0;     // Zeeman splitting (J), > 0
  double gamma_up = 0.0;    // relaxation rate, phonon emission (1/s)
  double gamma_down = 0.0;  // excitation rate, phonon absorption (1/s)
  double p_up = 0.0;        // upper-level population
  double p_down = 1.0;      // lower-level population; p_up + p_down == 1
};

// Throws ValidationError unless populations are normalized and in [0,1],
// rates are non-negative, and delta_E > 0.
void require_valid(const SpinSystem& sys);

struct ThermometerConfig {
  double B = 1.0;               // magnetic field (T)
  double g_factor = 0.44;       // electron g-factor magnitude
  double substrate_gap = 1e-7;  // distance between the two substrates (m)
  double base_rate = 0.0;       // bare emission rate before suppression (1/s);
                                // 0 means "auto": 1/suppression_factor so the
                                // total rate at low temperature is 1/s
  double phonon_speed = 1e3;    // piezophonon speed (m/s)
};

void require_valid(const ThermometerConfig& cfg);

// delta_E = g * mu_B * B (J).
double zeeman_splitting(const ThermometerConfig& cfg, const PhysicalConstants& pc = codata());

// exp(-2 * substrate_gap * delta_E / (hbar * phonon_speed)): decay of the
// piezoelectric field over the gap, at the phonon wavenumber fixed by energy
// conservation hbar*c*k = delta_E. In (0, 1].
double suppression_factor(const ThermometerConfig& cfg, const PhysicalConstants& pc = codata());

// Effective base rate with the auto default resolved.
double resolved_base_rate(const ThermometerConfig& cfg, const PhysicalConstants& pc = codata());

// Detailed-balance rates at bath temperature T:
//   gamma_up   = base * suppression * (n_bose + 1)   (emission)
//   gamma_down = base * suppression * n_bose          (absorption)
// with n_bose = 1/(exp(delta_E/k_B T) - 1), 0 at T = 0. The steady state of
// these rates reproduces p_up/p_down = exp(-delta_E/(k_B T)) at every T.
std::pair<double, double> rates_at_temperature(const ThermometerConfig& cfg, double T,
                                               const PhysicalConstants& pc = codata());

// Closed-form rate-equation solution over a time span t >= 0:
// p_up(t) = p_ss + (p_up(0) - p_ss) * exp(-(gamma_up+gamma_down) t) with
// p_ss = gamma_down/(gamma_up+gamma_down). Normalization preserved exactly.
SpinSystem evolve(const SpinSystem& sys, double t);

struct PopulationRatio {
  double value = 0.0;      // r = p_up/p_down at thermal equilibrium
  bool underflow = false;  // exp underflowed to 0 (ratio unmeasurably small)
};

// r = exp(-delta_E / (k_B * T_H)). Throws ValidationError for T_H <= 0.
PopulationRatio steady_state_ratio(double T_H, double delta_E,
                                   const PhysicalConstants& pc = codata());

struct TemperatureEstimate {
  double T_H = 0.0;         // K
  double sensitivity = 0.0; // |dr/r| per unit dT_H/T_H, equals delta_E/(k_B T_H)
};

// Inverts the ratio equation: T_H = -delta_E / (k_B ln r) for r in (0, 1).
TemperatureEstimate infer_temperature(double r, double delta_E,
                                      const PhysicalConstants& pc = codata());

}  // namespace sawsim
