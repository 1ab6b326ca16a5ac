#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sawsim {

// Piezoelectric semiconductor parameters. The electrodynamic constants
// mu, epsilon, omega, n_max never enter separately: only the dimensionless
// conductivity scale sigma = mu*q*n_max/(omega*epsilon) appears in the
// effective permittivity, so sigma is stored as a single scalar.
struct MaterialParams {
  double c0 = 0.0;       // base SAW speed, fully screened substrate (m/s)
  double K2 = 0.0;       // piezoelectric coupling constant (dimensionless)
  double kappa_s = 0.0;  // inverse screening length (1/m)
  double sigma = 0.0;    // conductivity scale mu*q*n_max/(omega*eps) (dimensionless)
  double omega = 0.0;    // SAW angular frequency (rad/s)
  double n_max = 1.0;    // density amplitude; profiles are stored in units of n_max
  double g_factor = 0.0; // electron g-factor magnitude (dimensionless)
  std::string name;
};

struct ValidationIssue {
  std::string field;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  bool ok() const { return errors.empty(); }
};

// GaAs parameter set: K2 = 1e-4, c0 = 1e3 m/s, kappa_s = 1e9 1/m,
// sigma = 10, omega = 2*pi*1 GHz, n_max = 1, g_factor = 0.44.
MaterialParams gaas_defaults();

// Total validation: every field combination yields either ok() or issues
// naming the offending fields. K2 above 0.1 is a warning (the stiffening
// expansion assumes K2 << 1), not an error.
ValidationReport validate(const MaterialParams& m);

// Throws ValidationError (first offending field) unless validate(m).ok().
void require_valid(const MaterialParams& m);

// (c_inside, c_outside) = (c0, c0*(1 + K2/2)): the screened speed under a
// dense electron gas vs the piezoelectrically stiffened bare-substrate speed.
std::pair<double, double> speed_contrast(const MaterialParams& m);

}  // namespace sawsim
