#include <fstream>
#include <ostream>
#include <sstream>

#include "nsfourier/error.hpp"
#include "nsfourier/harness.hpp"
#include "nsfourier/snapshot.hpp"
#include "nsfourier/spectral.hpp"

namespace nsfourier::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<double> sobolev_orders(const std::string& norms) {
  std::vector<double> orders;
  for (const auto& n : parse_norm_list(norms)) {
    if (n.kind == NormKind::Sobolev || n.kind == NormKind::SobolevFourier) orders.push_back(n.s);
  }
  return orders;
}

std::string frame_name(const std::string& stem, long step) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%06ld.csv", stem.c_str(), step);
  return buf;
}

}  // namespace

std::map<std::string, std::string> read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = trim(t.substr(eq + 1));
  }
  return kv;
}

void RunManifest::validate() const {
  if (scenario.empty()) throw ConfigError("no scenario given");
  stepper.validate();
  if (!(horizon > 0.0)) throw ConfigError("T must be positive");
  if (cadence < 0) throw ConfigError("cadence must be >= 1");
  if (cadence == 0 && snapshots < 1) throw ConfigError("snapshots must be >= 1");
  if (out_dir.empty()) throw ConfigError("output directory is empty");
  parse_norm_list(norms);
}

long RunManifest::snapshot_cadence(long steps) const {
  if (cadence > 0) return cadence;
  return std::max(1L, (steps + snapshots - 1) / snapshots);
}

std::string RunManifest::to_text() const {
  std::ostringstream t;
  t << "scenario=" << scenario << '\n'
    << "m=" << params.taylor_green_m << '\n'
    << "rho0=" << format_double(params.shear_width) << '\n'
    << "grid=" << grid_points << '\n'
    << "truncation=" << stepper.truncation << '\n'
    << "nu=" << format_double(stepper.nu) << '\n'
    << "tau=" << format_double(stepper.tau) << '\n'
    << "T=" << format_double(horizon) << '\n'
    << "scheme=" << to_string(stepper.scheme) << '\n'
    << "tolerance=" << format_double(stepper.tolerance) << '\n'
    << "max-iterations=" << stepper.max_iterations << '\n'
    << "out=" << out_dir.string() << '\n';
  if (cadence > 0) {
    t << "cadence=" << cadence << '\n';
  } else {
    t << "snapshots=" << snapshots << '\n';
  }
  t << "norms=" << norms << '\n' << "seed=" << seed << '\n' << "simd=" << simd << '\n';
  return t.str();
}

SimulateSummary simulate(const RunManifest& manifest, std::ostream& log) {
  manifest.validate();
  const PhysicalGrid grid(manifest.grid_points);
  const Scenario sc = make_scenario(manifest.scenario, grid, manifest.params);
  StepperConfig cfg = manifest.stepper;
  cfg.forcing = sc.forcing;
  const long steps = step_count(manifest.horizon, cfg.tau);
  const long cadence = manifest.snapshot_cadence(steps);

  std::error_code ec;
  std::filesystem::create_directories(manifest.out_dir, ec);
  {
    std::ofstream probe(manifest.out_dir / "manifest.txt");
    if (!probe) throw ConfigError("output directory not writable: " + manifest.out_dir.string());
    probe << manifest.to_text();
  }

  SimulateSummary summary;
  summary.steps = steps;
  summary.files.push_back(manifest.out_dir / "manifest.txt");

  auto write_frame = [&](long step, double time, const SpectralVectorField& u) {
    const auto wpath = manifest.out_dir / frame_name("vorticity", step);
    const auto upath = manifest.out_dir / frame_name("velocity", step);
    write_snapshot(wpath, vorticity_snapshot(u), time);
    write_snapshot(upath, inverse_transform(u), time);
    summary.files.push_back(wpath);
    summary.files.push_back(upath);
  };

  const int n = cfg.truncation < 0 ? grid.max_truncation() : cfg.truncation;
  write_frame(0, 0.0, leray_project(truncate(sc.initial_velocity, n)));

  RunOptions options;
  options.sobolev_orders = sobolev_orders(manifest.norms);
  options.observers.push_back([&](const StepObservation& obs) {
    if (obs.step % cadence == 0 || obs.step == steps) write_frame(obs.step, obs.time, obs.result.state);
  });

  log << "simulate " << manifest.scenario << ": grid " << grid.points() << ", " << steps
      << " steps of tau=" << format_double(cfg.tau) << ", nu=" << format_double(cfg.nu)
      << ", scheme " << to_string(cfg.scheme) << '\n';
  const RunOutput out = run(sc.initial_velocity, cfg, manifest.horizon, options);

  const auto csv_path = manifest.out_dir / "diagnostics.csv";
  {
    std::ofstream csv(csv_path);
    std::string comment = manifest.to_text();
    for (auto& c : comment) {
      if (c == '\n') c = ' ';
    }
    write_diagnostics_csv(csv, out.records, comment);
  }
  summary.files.push_back(csv_path);

  summary.energy = energy_monitor(out.records, static_cast<bool>(cfg.forcing));
  if (!summary.energy.enabled) {
    log << "energy monitor: disabled (forced run)\n";
  } else if (summary.energy.clean()) {
    log << "energy monitor: clean, L2 " << format_double(out.records.front().l2_energy) << " -> "
        << format_double(out.records.back().l2_energy) << '\n';
  } else {
    log << "energy monitor: " << summary.energy.violations.size() << " violation(s), first at step "
        << summary.energy.violations.front().step << '\n';
  }

  if (sc.exact_solution) {
    summary.final_errors =
        error_norms(out.final_state, sc.exact_solution(manifest.horizon), parse_norm_list(manifest.norms));
    log << "errors at T:";
    for (const auto& [label, v] : summary.final_errors) log << ' ' << label << '=' << format_double(v);
    log << '\n';
  }
  log << "wrote " << summary.files.size() << " files to " << manifest.out_dir.string() << '\n';
  return summary;
}

}  // namespace nsfourier::harness
