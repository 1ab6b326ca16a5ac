#include "sawsim/io/csv.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "sawsim/errors.hpp"

namespace sawsim::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw Error("write failed: " + path.string());
}

namespace {

void meta_lines(std::ostringstream& os, const std::vector<std::string>& meta) {
  for (const auto& line : meta) os << "# " << line << "\n";
}

}  // namespace

std::string density_csv(const DensityProfile& profile) {
  std::ostringstream os;
  os << "# provenance = " << to_string(profile.provenance) << "\n";
  os << "# units: x [m], n [n_max], dn_dx [n_max/m]\n";
  os << "x,n,dn_dx\n";
  for (std::size_t i = 0; i < profile.grid.size(); ++i)
    os << format_double(profile.grid.x(i)) << ',' << format_double(profile.n[i]) << ','
       << format_double(profile.dn_dx[i]) << "\n";
  return os.str();
}

std::string speed_csv(const SpeedProfile& sp) {
  std::ostringstream os;
  os << "# provenance = " << to_string(sp.provenance) << "\n";
  if (sp.provenance == SpeedProvenance::fixed_point) {
    os << "# iterations_used = " << sp.iterations_used << "\n";
    os << "# residual = " << format_double(sp.residual) << "\n";
  }
  os << "# units: x [m], c [m/s], dc_dx [1/s]\n";
  os << "x,c,dc_dx\n";
  for (std::size_t i = 0; i < sp.grid.size(); ++i)
    os << format_double(sp.grid.x(i)) << ',' << format_double(sp.c[i]) << ','
       << format_double(sp.dc_dx[i]) << "\n";
  return os.str();
}

std::string probes_csv(const ProbeSeries& probes, const std::vector<std::string>& meta) {
  std::ostringstream os;
  meta_lines(os, meta);
  os << "t";
  for (const double p : probes.positions) os << ",u@" << format_double(p);
  os << "\n";
  for (std::size_t k = 0; k < probes.times.size(); ++k) {
    os << format_double(probes.times[k]);
    for (const double v : probes.values[k]) os << ',' << format_double(v);
    os << "\n";
  }
  return os.str();
}

std::string traces_csv(const std::vector<RayTrace>& traces, const std::vector<std::string>& meta) {
  std::ostringstream os;
  meta_lines(os, meta);
  os << "ray,t,xi\n";
  for (std::size_t r = 0; r < traces.size(); ++r)
    for (std::size_t k = 0; k < traces[r].t.size(); ++k)
      os << r << ',' << format_double(traces[r].t[k]) << ',' << format_double(traces[r].xi[k])
         << "\n";
  return os.str();
}

std::string populations_csv(const std::vector<double>& t, const std::vector<double>& p_up,
                            const std::vector<std::string>& meta) {
  std::ostringstream os;
  meta_lines(os, meta);
  os << "t,p_up,p_down\n";
  for (std::size_t k = 0; k < t.size(); ++k)
    os << format_double(t[k]) << ',' << format_double(p_up[k]) << ','
       << format_double(1.0 - p_up[k]) << "\n";
  return os.str();
}

std::string sweep_csv(const std::string& parameter, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "# parameter = " << parameter << "\n";
  os << "# units: kappa_g [1/s], T_H [K]\n";
  os << "value,kappa_g,T_H,horizons,status\n";
  for (const auto& row : rows) {
    os << format_double(row.value) << ',';
    if (row.status == "ok")
      os << format_double(row.kappa_g) << ',' << format_double(row.T_H) << ','
         << row.horizon_count;
    else
      os << ",,";
    os << ',' << row.status << "\n";
  }
  return os.str();
}

std::string fnv1a64_hex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for checksum: " + path.string());
  std::uint64_t h = 14695981039346656037ull;
  char buf[8192];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const auto got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
    if (!in) break;
  }
  char out[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  out[16] = '\0';
  return std::string(out, 16);
}

}  // namespace sawsim::io
