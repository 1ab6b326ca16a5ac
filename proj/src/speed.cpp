#include "sawsim/speed.hpp"

#include <algorithm>
#include <cmath>

namespace sawsim {

namespace {

// Centered differences interior, one-sided second order at the ends.
std::vector<double> finite_difference(const Grid1D& grid, const std::vector<double>& f) {
  const std::size_t n = grid.size();
  const double dx = grid.dx();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dx);
  return d;
}

}  // namespace

std::string to_string(SpeedProvenance p) {
  return p == SpeedProvenance::fixed_point ? "fixed_point" : "piecewise";
}

double SpeedProfile::min_c() const { return *std::min_element(c.begin(), c.end()); }
double SpeedProfile::max_c() const { return *std::max_element(c.begin(), c.end()); }

std::complex<double> effective_permittivity_ratio(double n, double dn_dx, double c,
                                                  const MaterialParams& m) {
  if (!(c > 0.0)) throw ValidationError("c", "effective_permittivity_ratio: speed must be positive");
  return m.sigma * std::complex<double>(dn_dx * c / m.omega, n);
}

std::complex<double> effective_elastic_ratio(std::complex<double> eps_ratio, double K2) {
  const std::complex<double> denom = 1.0 - eps_ratio;
  if (denom == std::complex<double>(0.0, 0.0))
    throw SingularityError("effective_elastic_ratio: stiffening pole at eps_ratio == 1");
  return 1.0 + K2 / denom;
}

SpeedProfile solve_speed_fixed_point(const DensityProfile& profile, const MaterialParams& m,
                                     double tol, int max_iter) {
  require_valid(m);
  if (!(tol > 0.0)) throw ValidationError("tol", "solve_speed_fixed_point: tol must be positive");
  if (max_iter < 1) throw ValidationError("max_iter", "solve_speed_fixed_point: max_iter must be >= 1");

  const std::size_t n = profile.grid.size();
  SpeedProfile sp{profile.grid, std::vector<double>(n, m.c0), {},
                  SpeedProvenance::fixed_point, 0, 0.0, {}};

  // The dispersion relation is algebraic in c at each node; iterate the map
  // c <- c0 * Re sqrt(1 + K2/(1 - eps_ratio(c))) pointwise from c == c0.
  for (int it = 1; it <= max_iter; ++it) {
    double max_rel = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto eps = effective_permittivity_ratio(profile.n[i], profile.dn_dx[i], sp.c[i], m);
      const auto stiffening = effective_elastic_ratio(eps, m.K2);
      const double next = m.c0 * std::sqrt(stiffening).real();
      max_rel = std::max(max_rel, std::abs(next - sp.c[i]) / sp.c[i]);
      sp.c[i] = next;
    }
    sp.residual_history.push_back(max_rel);
    sp.iterations_used = it;
    sp.residual = max_rel;
    if (max_rel < tol) {
      sp.dc_dx = finite_difference(sp.grid, sp.c);
      return sp;
    }
  }
  sp.dc_dx = finite_difference(sp.grid, sp.c);
  throw ConvergenceError("solve_speed_fixed_point: no convergence after " +
                             std::to_string(max_iter) + " iterations (residual " +
                             std::to_string(sp.residual) + ")",
                         std::move(sp));
}

double ramp_slope(const MaterialParams& m) { return m.kappa_s * m.K2 * m.c0 / 8.0; }

SpeedProfile piecewise_speed(const MaterialParams& m, const Grid1D& grid) {
  require_valid(m);
  if (grid.dx() > 0.1 / m.kappa_s * (1.0 + 1e-12))
    throw GridError("piecewise_speed: grid must resolve 1/kappa_s with >= 10 points");

  const double edge = 2.0 / m.kappa_s;
  const double slope = ramp_slope(m);
  const double c_mid = m.c0 * (1.0 + m.K2 / 4.0);
  const auto [c_in, c_out] = speed_contrast(m);

  const std::size_t n = grid.size();
  SpeedProfile sp{grid, std::vector<double>(n), std::vector<double>(n),
                  SpeedProvenance::piecewise, 0, 0.0, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.x(i);
    if (x < -edge) {
      sp.c[i] = c_in;
      sp.dc_dx[i] = 0.0;
    } else if (x > edge) {
      sp.c[i] = c_out;
      sp.dc_dx[i] = 0.0;
    } else {
      sp.c[i] = c_mid + slope * x;
      sp.dc_dx[i] = slope;
    }
  }
  return sp;
}

GradientPeak max_gradient(const SpeedProfile& sp) {
  if (sp.grid.size() < 3) throw GridError("max_gradient: need at least 3 samples");
  double best = 0.0;
  for (std::size_t i = 0; i < sp.grid.size(); ++i) best = std::max(best, std::abs(sp.dc_dx[i]));
  if (best == 0.0) return {0.0, sp.grid.midpoint()};

  // Samples can tie exactly (a linear ramp has one slope value); report the
  // center of the first run of ties so a symmetric ramp peaks at its middle.
  std::size_t first = 0;
  while (std::abs(sp.dc_dx[first]) != best) ++first;
  std::size_t last = first;
  while (last + 1 < sp.grid.size() && std::abs(sp.dc_dx[last + 1]) == best) ++last;
  return {best, 0.5 * (sp.grid.x(first) + sp.grid.x(last))};
}

}  // namespace sawsim
