#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sawsim/grid.hpp"
#include "sawsim/speed.hpp"

namespace sawsim {

enum class Boundary { periodic, reflecting, absorbing };

std::string to_string(Boundary b);

struct SolverConfig {
  double dt = 0.0;        // s; 0 means "derive from the CFL bound"
  Boundary boundary = Boundary::absorbing;
  double cfl_safety = 0.9;  // in (0, 1]
  // Diagnostic knob: skip the CFL check so instability detection can be
  // exercised. Production paths leave this on.
  bool enforce_cfl = true;
};

// Two consecutive amplitude snapshots of the leapfrog scheme. `time` is the
// time of u_curr; u_prev lags by dt. The boundary is part of the state so
// that diagnostics know whether the domain is a circle or an interval.
struct WaveField {
  Grid1D grid;
  std::vector<double> u_prev;
  std::vector<double> u_curr;
  double time = 0.0;
  long step_count = 0;
  double dt = 0.0;
  Boundary boundary = Boundary::absorbing;
};

// Resolved time step for this (grid, speed, config) triple; throws CflError
// if an explicit cfg.dt violates dt <= cfl_safety * dx / max(c) while
// enforcement is on.
double resolve_dt(const SolverConfig& cfg, const SpeedProfile& sp);

// Builds the two-snapshot state from initial amplitude u0(x) and velocity
// v0(x): u_prev holds u0, u_curr the Taylor half-step
// u0 + dt*v0 + (dt^2/2) * d/dx(c^2 du0/dx), keeping second-order accuracy.
WaveField init_wave_field(const Grid1D& grid, const std::function<double(double)>& u0,
                          const std::function<double(double)>& v0, const SpeedProfile& sp,
                          const SolverConfig& cfg);

// One leapfrog update in flux form with face-centered c^2 (arithmetic mean of
// adjacent samples). Throws StabilityError on non-finite or overflowing
// amplitudes, CflError on a violated bound.
WaveField step(const WaveField& wf, const SpeedProfile& sp, const SolverConfig& cfg);

struct ProbeSpec {
  std::vector<double> positions;  // m
  long stride = 1;                // record every `stride` steps
};

struct ProbeSeries {
  std::vector<double> positions;
  std::vector<double> times;
  std::vector<std::vector<double>> values;  // values[k][j]: probe j at time k
};

struct RunResult {
  WaveField field;
  ProbeSeries probes;
};

// Repeated stepping until field.time + dt would exceed t_end, recording u at
// the probe positions. t_end at or below the current time returns the input.
RunResult run(const WaveField& wf, const SpeedProfile& sp, const SolverConfig& cfg,
              double t_end, const ProbeSpec& probes = {});

// Discrete energy of the snapshot pair, centered at the half step:
// sum of (1/2)((u_curr-u_prev)/dt)^2 and (1/2) c^2_face * dx-difference
// product of the two snapshots. Exactly conserved by the leapfrog update for
// periodic or reflecting boundaries and static c(x).
double energy(const WaveField& wf, const SpeedProfile& sp);

}  // namespace sawsim
