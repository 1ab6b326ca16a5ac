#include "sawsim/grid.hpp"

#include <cmath>

#include "sawsim/errors.hpp"

namespace sawsim {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
  if (!(x_min < x_max)) throw GridError("grid: x_min must be below x_max");
  if (!std::isfinite(x_min) || !std::isfinite(x_max)) throw GridError("grid: non-finite bounds");
  if (n_points < 3) throw GridError("grid: need at least 3 points");
  dx_ = (x_max_ - x_min_) / static_cast<double>(n_ - 1);
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = x(i);
  return xs;
}

std::size_t Grid1D::cell_index(double xq) const {
  const double t = (xq - x_min_) / dx_;
  if (t <= 0.0) return 0;
  const auto last = n_ - 2;
  const auto i = static_cast<std::size_t>(t);
  return i > last ? last : i;
}

double interp_linear(const Grid1D& grid, const std::vector<double>& samples, double xq) {
  if (samples.size() != grid.size()) throw GridError("interp: sample count mismatch");
  if (xq <= grid.x_min()) return samples.front();
  if (xq >= grid.x_max()) return samples.back();
  const std::size_t i = grid.cell_index(xq);
  const double xi = grid.x(i);
  double t = (xq - xi) / grid.dx();
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  return samples[i] * (1.0 - t) + samples[i + 1] * t;
}

}  // namespace sawsim
