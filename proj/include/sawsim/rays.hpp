#pragma once

#include <cstddef>
#include <vector>

#include "sawsim/speed.hpp"

namespace sawsim {

// Sound-ray characteristic in the frame of an observer moving at velocity v:
// d(xi)/dt = direction * c(xi) - v. `truncated` marks traces that left the
// grid before t_end.
struct RayTrace {
  int direction = +1;           // +1 or -1
  double observer_speed = 0.0;  // m/s (signed)
  std::vector<double> t;        // s, strictly increasing
  std::vector<double> xi;       // comoving position (m)
  bool truncated = false;
};

struct TraceOptions {
  // Step bound relative to the local gradient: dt <= rate_fraction/|dc/dx|.
  double rate_fraction = 0.01;
  // Step bound relative to cell crossing: dt <= cell_fraction*dx/|dxi/dt|.
  double cell_fraction = 0.25;
  long max_steps = 20'000'000;
};

// Classical RK4 with the adaptive step above; c(xi) is linearly interpolated.
// Throws GridError if xi0 is outside the grid or t_end <= 0.
RayTrace trace_characteristic(const SpeedProfile& sp, double v, double xi0, int direction,
                              double t_end, const TraceOptions& opts = {});

struct FitOptions {
  std::size_t min_samples = 10;
  // Reject as non-exponential when the quadratic term of ln|xi - x_h| vs t
  // explains more than this fraction of the linear change.
  double max_curvature_fraction = 0.05;
  // Only samples with separation |xi - x_h| inside this window are used.
  double window_min = 0.0;
  double window_max = 0.0;  // 0 means unbounded
};

struct ExponentFit {
  double slope = 0.0;         // 1/s
  double rms_residual = 0.0;  // in log units
  std::size_t n_used = 0;
};

// Least-squares slope of ln|xi(t) - x_h| vs t: the peel-off rate of a
// near-horizon ray, which matches |dc/dx| at the horizon on a linear ramp.
// Throws FitError for too few usable samples, non-monotone separation, or a
// clearly non-exponential trace.
ExponentFit fit_horizon_exponent(const RayTrace& trace, double x_h, const FitOptions& opts = {});

}  // namespace sawsim
