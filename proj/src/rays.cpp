#include "sawsim/rays.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sawsim/errors.hpp"

namespace sawsim {

RayTrace trace_characteristic(const SpeedProfile& sp, double v, double xi0, int direction,
                              double t_end, const TraceOptions& opts) {
  if (direction != 1 && direction != -1)
    throw ValidationError("direction", "trace_characteristic: direction must be +1 or -1");
  if (!sp.grid.contains(xi0)) throw GridError("trace_characteristic: xi0 outside the grid");
  if (!(t_end > 0.0)) throw ValidationError("t_end", "trace_characteristic: t_end must be positive");

  const double dir = static_cast<double>(direction);
  auto rhs = [&](double xi) { return dir * sp.c_at(xi) - v; };

  RayTrace trace;
  trace.direction = direction;
  trace.observer_speed = v;
  trace.t.push_back(0.0);
  trace.xi.push_back(xi0);

  double t = 0.0;
  double xi = xi0;
  const double dx = sp.grid.dx();
  for (long n = 0; n < opts.max_steps && t < t_end; ++n) {
    const double speed = std::abs(rhs(xi));
    const double rate = std::abs(sp.dc_dx_at(xi));
    double dt = t_end - t;
    if (rate > 0.0) dt = std::min(dt, opts.rate_fraction / rate);
    if (speed > 0.0) dt = std::min(dt, opts.cell_fraction * dx / speed);
    if (!(dt > 0.0)) break;

    const double k1 = rhs(xi);
    const double k2 = rhs(xi + 0.5 * dt * k1);
    const double k3 = rhs(xi + 0.5 * dt * k2);
    const double k4 = rhs(xi + dt * k3);
    xi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;

    if (!sp.grid.contains(xi)) {
      trace.truncated = true;
      break;
    }
    trace.t.push_back(t);
    trace.xi.push_back(xi);
  }
  return trace;
}

namespace {

// Solve the 3x3 system M x = b by Cramer's rule; returns false when singular.
bool solve3(const std::array<std::array<double, 3>, 3>& M, const std::array<double, 3>& b,
            std::array<double, 3>& x) {
  auto det3 = [](const std::array<std::array<double, 3>, 3>& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  };
  const double d = det3(M);
  if (d == 0.0) return false;
  for (int col = 0; col < 3; ++col) {
    auto Mc = M;
    for (int row = 0; row < 3; ++row) Mc[row][col] = b[row];
    x[col] = det3(Mc) / d;
  }
  return true;
}

}  // namespace

ExponentFit fit_horizon_exponent(const RayTrace& trace, double x_h, const FitOptions& opts) {
  std::vector<double> ts, ls;
  ts.reserve(trace.t.size());
  ls.reserve(trace.t.size());
  double prev = -1.0;
  for (std::size_t i = 0; i < trace.t.size(); ++i) {
    const double d = std::abs(trace.xi[i] - x_h);
    if (d <= 0.0) continue;
    if (d < opts.window_min) continue;
    if (opts.window_max > 0.0 && d > opts.window_max) continue;
    if (prev >= 0.0 && d < prev * (1.0 - 1e-9))
      throw FitError("fit_horizon_exponent: separation from the horizon is not monotone");
    prev = d;
    ts.push_back(trace.t[i]);
    ls.push_back(std::log(d));
  }
  if (ts.size() < opts.min_samples)
    throw FitError("fit_horizon_exponent: fewer than " + std::to_string(opts.min_samples) +
                   " usable samples");

  const std::size_t n = ts.size();
  const double t0 = ts.front();
  const double span = ts.back() - t0;
  if (!(span > 0.0)) throw FitError("fit_horizon_exponent: degenerate time span");

  // Moments in normalized time u = (t - t0)/span for conditioning.
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0, sy = 0, suy = 0, su2y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (ts[i] - t0) / span;
    const double u2 = u * u;
    s1 += u;
    s2 += u2;
    s3 += u2 * u;
    s4 += u2 * u2;
    sy += ls[i];
    suy += u * ls[i];
    su2y += u2 * ls[i];
  }
  const double nn = static_cast<double>(n);

  // Linear LSQ slope of ln|xi - x_h| vs t.
  const double det = nn * s2 - s1 * s1;
  if (det == 0.0) throw FitError("fit_horizon_exponent: singular normal equations");
  const double b_lin = (nn * suy - s1 * sy) / det;
  const double a_lin = (sy - b_lin * s1) / nn;

  ExponentFit fit;
  fit.slope = b_lin / span;
  fit.n_used = n;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (ts[i] - t0) / span;
    const double r = ls[i] - (a_lin + b_lin * u);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / nn);

  // Quadratic refit; a second-order term explaining more than
  // max_curvature_fraction of the linear change marks the trace as
  // non-exponential (e.g. plain drift at constant c - v).
  std::array<std::array<double, 3>, 3> M{{{nn, s1, s2}, {s1, s2, s3}, {s2, s3, s4}}};
  std::array<double, 3> rhs{sy, suy, su2y};
  std::array<double, 3> coef{};
  if (solve3(M, rhs, coef)) {
    const double linear = std::abs(coef[1]);
    const double quadratic = std::abs(coef[2]);
    if (linear > 0.0 && quadratic > opts.max_curvature_fraction * linear)
      throw FitError("fit_horizon_exponent: separation is not exponential "
                     "(log-curvature exceeds the acceptance fraction)");
  }
  return fit;
}

}  // namespace sawsim
