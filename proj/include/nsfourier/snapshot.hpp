#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nsfourier/fields.hpp"
#include "nsfourier/stepper.hpp"

namespace nsfourier {

// Snapshot text format (version 1):
//   line 1:  M=<int> components=<1|2> time=<float>
//   then components * M lines; line (c * M + j2) holds the M values
//   value(c, j2, j1), j1 = 0 .. M-1, comma separated, printed with 17
//   significant digits. Node (j1, j2) sits at (x, y) = (j1, j2) * 2pi/M.

struct Snapshot {
  PhysicalField field;
  double time;
};

void write_snapshot(std::ostream& out, const PhysicalField& field, double time);
void write_snapshot(const std::filesystem::path& path, const PhysicalField& field, double time);
Snapshot read_snapshot(std::istream& in);
Snapshot read_snapshot(const std::filesystem::path& path);

/// "# <comment>" line, header step,time,energy_L2,H1,H<s>...,picard_iterations,residual, rows.
void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records,
                           const std::string& comment);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace nsfourier
