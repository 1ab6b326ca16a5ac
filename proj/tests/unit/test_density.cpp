#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sawsim/density.hpp"
#include "sawsim/errors.hpp"

using namespace sawsim;

namespace {
constexpr double kKappa = 1e9;

Grid1D standard_grid(double kappa = kKappa, double half_span_kappa = 8.0, std::size_t n = 1601) {
  return Grid1D::symmetric(half_span_kappa / kappa, n);
}
}  // namespace

TEST_CASE("grid basics") {
  const Grid1D g(-1.0, 1.0, 5);
  CHECK(g.dx() == doctest::Approx(0.5));
  CHECK(g.x(0) == -1.0);
  CHECK(g.x(4) == 1.0);
  CHECK(g.x(2) == 0.0);  // exact center for symmetric grids
  CHECK_THROWS_AS(Grid1D(1.0, -1.0, 5), GridError);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2), GridError);
}

TEST_CASE("step density") {
  const auto grid = standard_grid();
  const auto p = step_density(grid);
  CHECK(p.provenance == DensityProvenance::step);
  CHECK(interp_linear(grid, p.n, -1e-6) == 1.0);  // clamped deep under the gate
  CHECK(p.n.front() == 1.0);
  CHECK(p.n.back() == 0.0);
  CHECK(p.n[grid.size() / 2] == 0.5);  // midpoint convention at the edge
  REQUIRE(p.singular_cell.has_value());
  CHECK(*p.singular_cell == grid.size() / 2);
  CHECK(std::all_of(p.dn_dx.begin(), p.dn_dx.end(), [](double v) { return v == 0.0; }));
}

TEST_CASE("smoothed density matches the erf oracle values") {
  const auto grid = standard_grid();
  const auto p = smoothed_density(grid, kKappa);
  CHECK(p.provenance == DensityProvenance::analytic);

  const std::size_t mid = grid.size() / 2;
  CHECK(p.n[mid] == 0.5);

  // x = 1/kappa: (1/2)(1 - erf(1)), erf(1) = 0.8427007929497149 from tables.
  const std::size_t at = mid + 100;  // dx = 0.01/kappa
  CHECK(grid.x(at) == doctest::Approx(1.0 / kKappa).epsilon(1e-12));
  CHECK(p.n[at] == doctest::Approx(0.5 * (1.0 - 0.8427007929497149)).epsilon(1e-12));
  CHECK(p.n[mid - 100] == doctest::Approx(0.5 * (1.0 + 0.8427007929497149)).epsilon(1e-12));
  CHECK(p.n[at] + p.n[mid - 100] == doctest::Approx(1.0).epsilon(1e-14));

  // Analytic derivative at the edge: -kappa/sqrt(pi).
  CHECK(p.dn_dx[mid] == doctest::Approx(-kKappa * 0.5641895835477563).epsilon(1e-14));

  CHECK_THROWS_AS(smoothed_density(grid, 0.0), ValidationError);
  CHECK_THROWS_AS(smoothed_density(grid, -1e9), ValidationError);
}

TEST_CASE("numeric convolution closes on the analytic profile") {
  const auto grid = standard_grid();
  const auto analytic = smoothed_density(grid, kKappa);
  const auto convolved = convolve_density(grid, kKappa);
  CHECK(convolved.provenance == DensityProvenance::convolved);

  double max_dev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    max_dev = std::max(max_dev, std::abs(convolved.n[i] - analytic.n[i]));
  CHECK(max_dev < 1e-6);

  // Kernel normalization: the deep-gate plateau integrates to exactly 1.
  CHECK(std::abs(convolved.n.front() - 1.0) < 1e-10);
  CHECK(std::abs(convolved.n.back()) < 1e-10);
  CHECK(std::abs(convolved.n[grid.size() / 2] - 0.5) < 1e-8);
}

TEST_CASE("convolution preconditions are quantified") {
  // Too narrow: only +-4/kappa.
  CHECK_THROWS_AS(convolve_density(Grid1D::symmetric(4.0 / kKappa, 801), kKappa), GridError);
  // Too coarse: dx = 0.2/kappa.
  CHECK_THROWS_AS(convolve_density(Grid1D::symmetric(8.0 / kKappa, 81), kKappa), GridError);
}

TEST_CASE("charge conservation") {
  const auto grid = standard_grid();

  SUBCASE("analytic profile on a symmetric grid") {
    const auto p = smoothed_density(grid, kKappa);
    CHECK(std::abs(charge_conservation(p, grid)) * kKappa < 1e-8);
  }
  SUBCASE("step against itself is exactly zero") {
    const auto p = step_density(grid);
    CHECK(charge_conservation(p, grid) == 0.0);
  }
  SUBCASE("asymmetric grid reports the one-sided tail, no error") {
    const Grid1D asym(-4.0 / kKappa, 8.0 / kKappa, 1201);
    const auto p = smoothed_density(asym, kKappa);
    const double residual = charge_conservation(p, asym);
    // Tail oracle: integral of erfc from z to infinity is
    // exp(-z^2)/sqrt(pi) - z*erfc(z); here half the z=4 tail survives.
    const double tail4 = std::exp(-16.0) / std::sqrt(M_PI) - 4.0 * std::erfc(4.0);
    const double expected = 0.5 * tail4 / kKappa;
    CHECK(residual != 0.0);
    CHECK(residual == doctest::Approx(expected).epsilon(1e-3));
  }
  SUBCASE("mismatched grids are rejected") {
    const auto p = smoothed_density(grid, kKappa);
    const auto other = Grid1D::symmetric(8.0 / kKappa, 1701);
    CHECK_THROWS_AS(charge_conservation(p, other), GridError);
  }
}

TEST_CASE("density profiles are non-increasing") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> log_kappa(6.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double kappa = std::pow(10.0, log_kappa(rng));
    const auto grid = Grid1D::symmetric(8.0 / kappa, 801);
    const auto p = smoothed_density(grid, kappa);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      CHECK(p.n[i] >= p.n[i + 1]);
      CHECK(p.dn_dx[i] <= 0.0);
    }
    CHECK(p.n.front() <= 1.0);
    CHECK(p.n.back() >= 0.0);
  }
  // |dn_dx| peaks at the gate edge.
  const auto p = smoothed_density(standard_grid(), kKappa);
  std::size_t imax = 0;
  for (std::size_t i = 0; i < p.n.size(); ++i)
    if (std::abs(p.dn_dx[i]) > std::abs(p.dn_dx[imax])) imax = i;
  CHECK(imax == p.n.size() / 2);
}

TEST_CASE("smoothed density approaches the step as the screening sharpens") {
  const auto grid = standard_grid();
  const auto sharp = smoothed_density(grid, 100.0 * kKappa);
  const auto step = step_density(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(grid.x(i)) > 0.05 / kKappa) CHECK(std::abs(sharp.n[i] - step.n[i]) < 1e-3);
  }
}

TEST_CASE("analytic derivative agrees with centered differences") {
  // dx = 0.0015/kappa keeps the O(dx^2) finite-difference error under 1e-6*kappa.
  const Grid1D grid = Grid1D::symmetric(6.0 / kKappa, 8001);
  const auto p = smoothed_density(grid, kKappa);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double fd = (p.n[i + 1] - p.n[i - 1]) / (2.0 * grid.dx());
    CHECK(std::abs(fd - p.dn_dx[i]) < 1e-6 * kKappa);
  }
}

TEST_CASE("transition width matches the profile, inside the nominal 4/kappa region") {
  const auto grid = standard_grid(kKappa, 8.0, 16001);
  const auto p = smoothed_density(grid, kKappa);

  // Last node above 0.99 and last node above 0.01 bracket the transition.
  double x_hi = grid.x_min(), x_lo = grid.x_max();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (p.n[i] > 0.99) x_hi = grid.x(i);
    if (p.n[i] > 0.01) x_lo = grid.x(i);
  }
  const double width = x_lo - x_hi;
  // Exact half-width where n crosses 0.01/0.99: inverse-erf of 0.98 = 1.644976.
  const double expected = 2.0 * 1.6449763571331870 / kKappa;
  CHECK(width == doctest::Approx(expected).epsilon(0.1));
  CHECK(width < 4.0 / kKappa);

  // The nominal 4/kappa region covers the transition entirely.
  const double n_left = interp_linear(grid, p.n, -2.0 / kKappa);
  const double n_right = interp_linear(grid, p.n, 2.0 / kKappa);
  CHECK(n_left > 0.99);
  CHECK(n_right < 0.01);
}
