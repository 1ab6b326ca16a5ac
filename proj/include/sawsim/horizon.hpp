#pragma once

#include <string>
#include <vector>

#include "sawsim/constants.hpp"
#include "sawsim/materials.hpp"
#include "sawsim/speed.hpp"

namespace sawsim {

// Crossing direction for increasing x: subsonic means c(x) > v (waves outrun
// the observer), supersonic means c(x) < v (waves are trapped).
enum class Crossing { sub_to_super, super_to_sub };

std::string to_string(Crossing c);

struct Horizon {
  double x_h = 0.0;      // m
  double kappa_g = 0.0;  // surface gravity |dc/dx| at x_h (1/s)
  double T_H = 0.0;      // Hawking temperature (K)
  Crossing crossing = Crossing::super_to_sub;
};

struct HorizonReport {
  double observer_speed = 0.0;             // m/s
  std::vector<Horizon> horizons;
  std::vector<double> metric_coefficient;  // g_tt(x) = -(c^2(x) - v^2), m^2/s^2
};

// All roots of c(x) - v on the sampled profile, located by bracketing plus
// bisection on the linear interpolant to |dx| < grid.dx()*1e-6. An empty
// horizon list is a valid outcome (v outside the profile's speed range).
HorizonReport find_horizons(const SpeedProfile& sp, double v,
                            const PhysicalConstants& pc = codata());

// |dc/dx| linearly interpolated at x_h. Throws GridError outside the grid.
double surface_gravity(const SpeedProfile& sp, double x_h);

// T_H = hbar * kappa_g / (2 pi k_B). Throws ValidationError for kappa_g < 0.
double hawking_temperature(double kappa_g, const PhysicalConstants& pc = codata());

// Observer speed matching the midpoint of the piecewise ramp,
// v = c0 * (1 + K2/4), which maximizes the gradient at the crossing.
double optimal_observer_speed(const MaterialParams& m);

}  // namespace sawsim
