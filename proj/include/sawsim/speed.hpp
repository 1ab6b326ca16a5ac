#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sawsim/density.hpp"
#include "sawsim/errors.hpp"
#include "sawsim/grid.hpp"
#include "sawsim/materials.hpp"

namespace sawsim {

enum class SpeedProvenance { fixed_point, piecewise };

std::string to_string(SpeedProvenance p);

// Space-dependent SAW speed c(x) with its gradient. c stays within
// [c0, c0*sqrt(1+K2)] for any admissible density profile.
struct SpeedProfile {
  Grid1D grid;
  std::vector<double> c;      // m/s
  std::vector<double> dc_dx;  // 1/s
  SpeedProvenance provenance;
  int iterations_used = 0;
  double residual = 0.0;                 // max relative change at convergence
  std::vector<double> residual_history;  // one entry per iteration

  double c_at(double x) const { return interp_linear(grid, c, x); }
  double dc_dx_at(double x) const { return interp_linear(grid, dc_dx, x); }
  double min_c() const;
  double max_c() const;
};

// eps_eff/eps = sigma * [ dn_dx * c / omega + i n ], with n and dn_dx in
// n_max-normalized units. The real part carries the density gradient, the
// imaginary part the Ohmic screening. Throws ValidationError for c <= 0.
std::complex<double> effective_permittivity_ratio(double n, double dn_dx, double c,
                                                  const MaterialParams& m);

// d_eff/d = 1 + K2 / (1 - eps_ratio): piezoelectric stiffening of the elastic
// constant, screened away as |eps_ratio| grows. Throws SingularityError at
// the pole eps_ratio == 1.
std::complex<double> effective_elastic_ratio(std::complex<double> eps_ratio, double K2);

// Thrown when the fixed-point iteration does not reach tol; carries the last
// iterate so callers can inspect how far it got.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, SpeedProfile last_iterate)
      : Error(msg), last_iterate_(std::move(last_iterate)) {}
  const SpeedProfile& last_iterate() const { return last_iterate_; }

 private:
  SpeedProfile last_iterate_;
};

// Pointwise fixed-point solve of c = c0 * Re sqrt(1 + K2/(1 - eps_ratio(c)))
// starting from c == c0. The relation is algebraic in c at each node, so no
// spatial coupling enters. dc_dx is filled by centered differences.
SpeedProfile solve_speed_fixed_point(const DensityProfile& profile, const MaterialParams& m,
                                     double tol = 1e-12, int max_iter = 100);

// Piecewise approximation: c0 for x < -2/kappa_s, c0*(1+K2/2) for
// x > +2/kappa_s, linear ramp of slope kappa_s*K2*c0/8 in between. dc_dx
// holds the exact piecewise-constant derivative. Requires dx <= 0.1/kappa_s.
SpeedProfile piecewise_speed(const MaterialParams& m, const Grid1D& grid);

// Exact ramp slope of the piecewise profile (1/s).
double ramp_slope(const MaterialParams& m);

struct GradientPeak {
  double slope = 0.0;  // max |dc_dx| (1/s)
  double x_at = 0.0;   // location (m)
};

// Maximum of |dc_dx| and its location; a constant profile reports slope 0 at
// the grid midpoint.
GradientPeak max_gradient(const SpeedProfile& sp);

}  // namespace sawsim
