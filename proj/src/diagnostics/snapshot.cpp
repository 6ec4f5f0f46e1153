#include "nsfourier/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "nsfourier/error.hpp"

namespace nsfourier {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_snapshot(std::ostream& out, const PhysicalField& field, double time) {
  if (!field.all_finite()) throw NumericalError("snapshot contains non-finite values");
  const int m = field.grid().points();
  out << "M=" << m << " components=" << field.components() << " time=" << format_double(time)
      << '\n';
  for (int c = 0; c < field.components(); ++c) {
    for (int j2 = 0; j2 < m; ++j2) {
      for (int j1 = 0; j1 < m; ++j1) {
        if (j1) out << ',';
        out << format_double(field.at(c, j2, j1));
      }
      out << '\n';
    }
  }
}

void write_snapshot(const std::filesystem::path& path, const PhysicalField& field, double time) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write snapshot " + path.string());
  write_snapshot(out, field, time);
}

Snapshot read_snapshot(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ConfigError("snapshot: missing header");
  int m = 0;
  int components = 0;
  double time = 0.0;
  {
    std::istringstream hs(header);
    std::string tok;
    int seen = 0;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ConfigError("snapshot: bad header token " + tok);
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "M") {
        m = std::stoi(val);
      } else if (key == "components") {
        components = std::stoi(val);
      } else if (key == "time") {
        time = std::stod(val);
      } else {
        throw ConfigError("snapshot: unknown header key " + key);
      }
      ++seen;
    }
    if (seen != 3) throw ConfigError("snapshot: header needs M, components and time");
  }
  PhysicalField field(PhysicalGrid(m), components);
  std::string line;
  for (int c = 0; c < components; ++c) {
    for (int j2 = 0; j2 < m; ++j2) {
      if (!std::getline(in, line)) throw ConfigError("snapshot: truncated data");
      const char* p = line.data();
      const char* end = line.data() + line.size();
      for (int j1 = 0; j1 < m; ++j1) {
        double v = 0.0;
        const auto res = std::from_chars(p, end, v);
        if (res.ec != std::errc{}) throw ConfigError("snapshot: bad value on row " + std::to_string(j2));
        field.at(c, j2, j1) = v;
        p = res.ptr;
        if (j1 + 1 < m) {
          if (p == end || *p != ',') throw ConfigError("snapshot: short row " + std::to_string(j2));
          ++p;
        }
      }
    }
  }
  return {std::move(field), time};
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read snapshot " + path.string());
  return read_snapshot(in);
}

void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records,
                           const std::string& comment) {
  out << "# " << comment << '\n';
  out << "step,time,energy_L2,H1";
  std::vector<double> orders;
  if (!records.empty()) {
    for (const auto& [s, v] : records.front().hs_norms) orders.push_back(s);
  }
  for (double s : orders) out << ",H" << format_double(s);
  out << ",picard_iterations,residual\n";
  for (const auto& r : records) {
    out << r.step << ',' << format_double(r.time) << ',' << format_double(r.l2_energy) << ','
        << format_double(r.h1_norm);
    for (double s : orders) out << ',' << format_double(r.hs_norms.at(s));
    out << ',' << r.picard_iterations << ',' << format_double(r.final_residual) << '\n';
  }
}

}  // namespace nsfourier
