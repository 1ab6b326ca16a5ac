#include "sawsim/horizon.hpp"

#include <cmath>
#include <numbers>

#include "sawsim/errors.hpp"

namespace sawsim {

std::string to_string(Crossing c) {
  return c == Crossing::sub_to_super ? "sub_to_super" : "super_to_sub";
}

namespace {

// Bisection on the linear interpolant of c(x) - v inside a bracketing cell.
double bisect_root(const SpeedProfile& sp, double v, double lo, double hi, double x_tol) {
  double f_lo = sp.c_at(lo) - v;
  while (hi - lo > x_tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = sp.c_at(mid) - v;
    if (f_mid == 0.0) return mid;
    if ((f_lo < 0.0) == (f_mid < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

HorizonReport find_horizons(const SpeedProfile& sp, double v, const PhysicalConstants& pc) {
  if (!(v > 0.0)) throw ValidationError("v", "find_horizons: observer speed must be positive");
  const std::size_t n = sp.grid.size();
  HorizonReport report;
  report.observer_speed = v;
  report.metric_coefficient.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    report.metric_coefficient[i] = -(sp.c[i] * sp.c[i] - v * v);

  const double x_tol = sp.grid.dx() * 1e-6;
  const double dedup = sp.grid.dx() * 0.5;
  auto add = [&](double x_h, bool rising) {
    if (!report.horizons.empty() && std::abs(report.horizons.back().x_h - x_h) < dedup) return;
    Horizon h;
    h.x_h = x_h;
    h.kappa_g = surface_gravity(sp, x_h);
    h.T_H = hawking_temperature(h.kappa_g, pc);
    // c rising through v: supersonic (c < v) on the left, subsonic on the right.
    h.crossing = rising ? Crossing::super_to_sub : Crossing::sub_to_super;
    report.horizons.push_back(h);
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double f0 = sp.c[i] - v;
    const double f1 = sp.c[i + 1] - v;
    if (f0 == 0.0) {
      // Exact sample on the horizon; direction from the neighboring samples.
      const double left = i > 0 ? sp.c[i - 1] - v : f1;
      add(sp.grid.x(i), left < 0.0 || f1 > 0.0);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
      const double x_h = bisect_root(sp, v, sp.grid.x(i), sp.grid.x(i + 1), x_tol);
      add(x_h, f0 < 0.0);
    }
  }
  // The loop above never tests the last node as a left endpoint.
  if (sp.c[n - 1] - v == 0.0) add(sp.grid.x(n - 1), sp.c[n - 2] < v);
  return report;
}

double surface_gravity(const SpeedProfile& sp, double x_h) {
  if (!sp.grid.contains(x_h)) throw GridError("surface_gravity: x_h outside the grid");
  return std::abs(sp.dc_dx_at(x_h));
}

double hawking_temperature(double kappa_g, const PhysicalConstants& pc) {
  if (kappa_g < 0.0)
    throw ValidationError("kappa_g", "hawking_temperature: surface gravity must be non-negative");
  return pc.hbar * kappa_g / (2.0 * std::numbers::pi * pc.k_B);
}

double optimal_observer_speed(const MaterialParams& m) {
  return m.c0 * (1.0 + m.K2 / 4.0);
}

}  // namespace sawsim
