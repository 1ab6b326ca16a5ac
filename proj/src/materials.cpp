#include "sawsim/materials.hpp"

#include <cmath>
#include <numbers>

#include "sawsim/errors.hpp"

namespace sawsim {

MaterialParams gaas_defaults() {
  MaterialParams m;
  m.c0 = 1e3;
  m.K2 = 1e-4;
  m.kappa_s = 1e9;
  m.sigma = 10.0;
  m.omega = 2.0 * std::numbers::pi * 1e9;
  m.n_max = 1.0;
  m.g_factor = 0.44;
  m.name = "GaAs";
  return m;
}

ValidationReport validate(const MaterialParams& m) {
  ValidationReport r;
  auto err = [&r](const char* field, const char* msg) {
    r.errors.push_back({field, msg});
  };
  auto finite = [](double v) { return std::isfinite(v); };

  if (!finite(m.c0) || m.c0 <= 0.0) err("c0", "base SAW speed must be positive and finite");
  if (!finite(m.K2) || m.K2 < 0.0) err("K2", "coupling constant must be non-negative and finite");
  if (!finite(m.kappa_s) || m.kappa_s <= 0.0)
    err("kappa_s", "inverse screening length must be positive and finite");
  if (!finite(m.omega) || m.omega <= 0.0) err("omega", "angular frequency must be positive and finite");
  if (!finite(m.n_max) || m.n_max < 0.0) err("n_max", "density amplitude must be non-negative and finite");
  if (!finite(m.sigma) || m.sigma < 0.0) err("sigma", "conductivity scale must be non-negative and finite");
  if (!finite(m.g_factor) || m.g_factor < 0.0)
    err("g_factor", "g-factor magnitude must be non-negative and finite");

  if (finite(m.K2) && m.K2 > 0.1)
    r.warnings.push_back({"K2", "coupling constant above 0.1: the stiffening expansion assumes K2 << 1"});
  return r;
}

void require_valid(const MaterialParams& m) {
  const auto report = validate(m);
  if (!report.ok()) {
    const auto& first = report.errors.front();
    throw ValidationError(first.field, "material '" + m.name + "': " + first.field + ": " + first.message);
  }
}

std::pair<double, double> speed_contrast(const MaterialParams& m) {
  require_valid(m);
  return {m.c0, m.c0 * (1.0 + m.K2 / 2.0)};
}

}  // namespace sawsim
