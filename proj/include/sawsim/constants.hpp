#pragma once

namespace sawsim {

// CODATA 2018 values, SI units. Not user-configurable through the normal
// config path; tests may construct modified copies directly.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;  // reduced Planck constant (J s)
  double k_B = 1.380649e-23;      // Boltzmann constant (J/K)
  double mu_B = 9.2740100783e-24; // Bohr magneton (J/T)
  double q = 1.602176634e-19;     // elementary charge magnitude (C)

  bool all_positive() const {
    return hbar > 0.0 && k_B > 0.0 && mu_B > 0.0 && q > 0.0;
  }
};

inline constexpr PhysicalConstants codata() { return PhysicalConstants{}; }

}  // namespace sawsim
