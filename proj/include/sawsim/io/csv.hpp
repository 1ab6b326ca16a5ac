#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sawsim/density.hpp"
#include "sawsim/rays.hpp"
#include "sawsim/speed.hpp"
#include "sawsim/wave.hpp"

namespace sawsim::io {

// Shortest decimal representation that round-trips to the same double;
// locale-independent. Reproducible output depends on this.
std::string format_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& content);

// Columns x, n, dn_dx with '#' metadata lines for provenance.
std::string density_csv(const DensityProfile& profile);

// Columns x, c, dc_dx; provenance and solver diagnostics in '#' lines.
std::string speed_csv(const SpeedProfile& sp);

// Columns t, u@<pos>... with config echo in '#' lines.
std::string probes_csv(const ProbeSeries& probes, const std::vector<std::string>& meta);

// Columns ray, t, xi for a batch of traces.
std::string traces_csv(const std::vector<RayTrace>& traces, const std::vector<std::string>& meta);

// Columns t, p_up, p_down.
std::string populations_csv(const std::vector<double>& t, const std::vector<double>& p_up,
                            const std::vector<std::string>& meta);

struct SweepRow {
  double value = 0.0;
  double kappa_g = 0.0;
  double T_H = 0.0;
  int horizon_count = 0;
  std::string status;  // "ok" or an error summary
};

// Columns value, kappa_g, T_H, horizons, status; rows in input order.
std::string sweep_csv(const std::string& parameter, const std::vector<SweepRow>& rows);

// FNV-1a 64-bit checksum of a file's bytes, as a fixed-width hex string.
std::string fnv1a64_hex(const std::filesystem::path& path);

}  // namespace sawsim::io
