#pragma once

#include <cstddef>
#include <vector>

namespace sawsim {

// Uniform 1D grid with inclusive endpoints.
class Grid1D {
 public:
  // Throws GridError unless x_min < x_max and n_points >= 3.
  Grid1D(double x_min, double x_max, std::size_t n_points);

  static Grid1D symmetric(double half_span, std::size_t n_points) {
    return Grid1D(-half_span, half_span, n_points);
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_; }
  double dx() const { return dx_; }

  // Node position by linear blend of the endpoints. For symmetric grids with
  // an odd point count the center node is exactly 0.
  double x(std::size_t i) const {
    const double n1 = static_cast<double>(n_ - 1);
    return (static_cast<double>(n_ - 1 - i) * x_min_ + static_cast<double>(i) * x_max_) / n1;
  }

  std::vector<double> nodes() const;

  bool contains(double x) const { return x >= x_min_ && x <= x_max_; }

  // Index of the cell [x(i), x(i+1)] containing x, clamped to [0, size()-2].
  std::size_t cell_index(double x) const;

  double midpoint() const { return 0.5 * (x_min_ + x_max_); }

  bool operator==(const Grid1D& other) const {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_ == other.n_;
  }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

// Linear interpolation of samples defined on grid nodes; x is clamped to the
// grid span, so evaluation just outside the grid returns the edge value.
double interp_linear(const Grid1D& grid, const std::vector<double>& samples, double x);

}  // namespace sawsim
