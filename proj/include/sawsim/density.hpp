#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sawsim/grid.hpp"

namespace sawsim {

enum class DensityProvenance { step, analytic, convolved };

std::string to_string(DensityProvenance p);

// Gate-induced 2DEG density sampled on a grid, normalized to n_max so that
// n is in [0, 1]. dn_dx is in units of n_max per meter.
struct DensityProfile {
  Grid1D grid;
  std::vector<double> n;
  std::vector<double> dn_dx;
  DensityProvenance provenance;
  // For the ideal step: node at the gate edge, where the derivative is
  // singular and reported as 0.
  std::optional<std::size_t> singular_cell;
};

// Ideal step: n = 1 under the gate (x < 0), 0 outside (x > 0), 1/2 at the
// edge so the step agrees with the smoothed profile's limit at x = 0.
DensityProfile step_density(const Grid1D& grid);

// Screened profile n(x) = (1/2) erfc(kappa_s x) with the analytic derivative
// dn_dx = -(kappa_s/sqrt(pi)) exp(-(kappa_s x)^2). Throws ValidationError for
// kappa_s <= 0.
DensityProfile smoothed_density(const Grid1D& grid, double kappa_s);

// Numeric convolution of the ideal step with the Gaussian kernel
// A exp(-(kappa_s x)^2), A normalized so the sampled kernel integrates to 1.
// Independent oracle for smoothed_density. Requires the grid to span at
// least [-8/kappa_s, 8/kappa_s] with dx <= 0.1/kappa_s (GridError otherwise).
DensityProfile convolve_density(const Grid1D& grid, double kappa_s);

// Trapezoid integral of (profile.n - step.n) over the grid. Zero (to roundoff)
// for analytic profiles on symmetric grids: the smoothing conserves charge.
// Throws GridError if the profile was built on a different grid.
double charge_conservation(const DensityProfile& profile, const Grid1D& grid);

}  // namespace sawsim
