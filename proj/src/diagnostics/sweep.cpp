#include "nsfourier/sweep.hpp"

#include <cmath>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "nsfourier/error.hpp"
#include "nsfourier/snapshot.hpp"

namespace nsfourier {

SweepAxis parse_sweep_axis(const std::string& name) {
  if (name == "tau") return SweepAxis::Tau;
  if (name == "nu") return SweepAxis::Nu;
  if (name == "resolution") return SweepAxis::Resolution;
  throw ConfigError("unknown sweep axis '" + name + "' (expected tau, nu or resolution)");
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Tau:
      return "tau";
    case SweepAxis::Nu:
      return "nu";
    case SweepAxis::Resolution:
      return "resolution";
  }
  return "unknown";
}

std::vector<double> halving_sequence(double base, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(std::ldexp(base, -k));
  return out;
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i) {
    const bool up = values[i] > values[i - 1];
    const bool first_up = values[1] > values[0];
    if (values[i] == values[i - 1] || up != first_up) {
      throw ConfigError("sweep values must be strictly monotone");
    }
  }
  if (!(horizon > 0.0)) throw ConfigError("sweep horizon must be positive");
  if (norms.empty()) throw ConfigError("sweep needs at least one norm");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
}

std::vector<double> observed_orders(const std::vector<double>& errors) {
  std::vector<double> out;
  for (std::size_t i = 1; i < errors.size(); ++i) out.push_back(std::log2(errors[i - 1] / errors[i]));
  return out;
}

namespace {

struct RunPoint {
  int grid_points;
  double tau;
  double nu;
};

std::vector<RunPoint> expand(const SweepSpec& spec) {
  std::vector<RunPoint> points;
  for (double v : spec.values) {
    switch (spec.vary) {
      case SweepAxis::Tau:
        points.push_back({spec.grid_points, v, spec.fixed.nu});
        break;
      case SweepAxis::Nu:
        points.push_back({spec.grid_points, spec.fixed.tau, v});
        break;
      case SweepAxis::Resolution: {
        const int m = static_cast<int>(std::lround(v));
        if (spec.nu_values.empty()) {
          points.push_back({m, spec.fixed.tau, spec.fixed.nu});
        } else {
          for (double nu : spec.nu_values) points.push_back({m, spec.fixed.tau, nu});
        }
        break;
      }
    }
  }
  return points;
}

SweepRow run_point(const SweepSpec& spec, const RunPoint& p) {
  const PhysicalGrid grid(p.grid_points);
  const Scenario sc = make_scenario(spec.scenario, grid, spec.scenario_params);
  if (!sc.exact_solution) {
    throw ConfigError("scenario '" + spec.scenario + "' has no exact solution to sweep against");
  }
  StepperConfig cfg = spec.fixed;
  cfg.tau = p.tau;
  cfg.nu = p.nu;
  cfg.forcing = sc.forcing;
  RunOptions options;
  options.sobolev_orders.clear();
  const RunOutput out = run(sc.initial_velocity, cfg, spec.horizon, options);
  SweepRow row;
  row.grid_points = p.grid_points;
  row.tau = p.tau;
  row.nu = p.nu;
  row.errors = error_norms(out.final_state, sc.exact_solution(spec.horizon), spec.norms);
  return row;
}

void fill_orders(SweepTable& table) {
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    SweepRow& cur = table.rows[i];
    const SweepRow& prev = table.rows[i - 1];
    if (cur.grid_points != prev.grid_points) continue;
    for (std::size_t j = 0; j < cur.errors.size(); ++j) {
      cur.orders.push_back(std::log2(prev.errors[j].second / cur.errors[j].second));
    }
  }
}

std::string swept_column(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Tau:
      return "tau";
    case SweepAxis::Nu:
      return "nu";
    case SweepAxis::Resolution:
      return "grid";
  }
  return "value";
}

std::string config_comment(const SweepSpec& spec) {
  std::ostringstream c;
  c << "# sweep vary=" << to_string(spec.vary) << " scenario=" << spec.scenario;
  if (spec.vary != SweepAxis::Resolution) c << " grid=" << spec.grid_points;
  if (spec.vary != SweepAxis::Tau) c << " tau=" << format_double(spec.fixed.tau);
  if (spec.vary != SweepAxis::Nu && spec.nu_values.empty()) c << " nu=" << format_double(spec.fixed.nu);
  c << " T=" << format_double(spec.horizon)
    << " scheme=" << to_string(spec.fixed.scheme)
    << " tolerance=" << format_double(spec.fixed.tolerance)
    << " max_iterations=" << spec.fixed.max_iterations << " values=";
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    c << (i ? ";" : "") << format_double(spec.values[i]);
  }
  if (!spec.nu_values.empty()) {
    c << " nu_values=";
    for (std::size_t i = 0; i < spec.nu_values.size(); ++i) {
      c << (i ? ";" : "") << format_double(spec.nu_values[i]);
    }
  }
  c << " norms: " << norm_conventions_note();
  return c.str();
}

}  // namespace

SweepTable convergence_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<RunPoint> points = expand(spec);
  SweepTable table;

  auto record_failure = [&](std::size_t index, const std::exception& e) {
    table.partial = true;
    std::ostringstream msg;
    msg << "run " << index << " (grid=" << points[index].grid_points
        << " tau=" << format_double(points[index].tau) << " nu=" << format_double(points[index].nu)
        << ") failed: " << e.what();
    table.failure = msg.str();
  };

  for (std::size_t start = 0; start < points.size() && !table.partial;
       start += static_cast<std::size_t>(spec.jobs)) {
    const std::size_t end = std::min(points.size(), start + static_cast<std::size_t>(spec.jobs));
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t i = start; i < end; ++i) {
      const auto launch = spec.jobs > 1 ? std::launch::async : std::launch::deferred;
      batch.push_back(std::async(launch, [&spec, &points, i] { return run_point(spec, points[i]); }));
    }
    for (std::size_t i = start; i < end; ++i) {
      try {
        SweepRow row = batch[i - start].get();
        if (!table.partial) table.rows.push_back(std::move(row));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        if (!table.partial) record_failure(i, e);
      }
    }
  }
  fill_orders(table);
  return table;
}

void write_table_csv(std::ostream& out, const SweepSpec& spec, const SweepTable& table) {
  out << config_comment(spec) << '\n';
  if (table.partial) out << "# PARTIAL: " << table.failure << '\n';
  const bool resolution = spec.vary == SweepAxis::Resolution;
  out << swept_column(spec.vary);
  if (resolution) out << ",nu";
  for (const auto& n : spec.norms) out << ',' << n.label;
  for (const auto& n : spec.norms) out << ",order_" << n.label;
  out << '\n';
  for (const auto& row : table.rows) {
    switch (spec.vary) {
      case SweepAxis::Tau:
        out << format_double(row.tau);
        break;
      case SweepAxis::Nu:
        out << format_double(row.nu);
        break;
      case SweepAxis::Resolution:
        out << row.grid_points << ',' << format_double(row.nu);
        break;
    }
    for (const auto& [label, value] : row.errors) out << ',' << format_double(value);
    for (std::size_t j = 0; j < row.errors.size(); ++j) {
      out << ',';
      if (j < row.orders.size()) out << format_double(row.orders[j]);
    }
    out << '\n';
  }
}

void print_table(std::ostream& out, const SweepSpec& spec, const SweepTable& table) {
  const bool resolution = spec.vary == SweepAxis::Resolution;
  out << std::setw(12) << swept_column(spec.vary);
  if (resolution) out << std::setw(12) << "nu";
  for (const auto& n : spec.norms) out << std::setw(14) << n.label;
  for (const auto& n : spec.norms) out << std::setw(12) << ("ord " + n.label);
  out << '\n';
  for (const auto& row : table.rows) {
    out << std::setw(12);
    switch (spec.vary) {
      case SweepAxis::Tau:
        out << row.tau;
        break;
      case SweepAxis::Nu:
        out << row.nu;
        break;
      case SweepAxis::Resolution:
        out << row.grid_points << std::setw(12) << row.nu;
        break;
    }
    for (const auto& [label, value] : row.errors) {
      out << std::setw(14) << std::setprecision(4) << std::scientific << value << std::defaultfloat;
    }
    for (std::size_t j = 0; j < row.errors.size(); ++j) {
      if (j < row.orders.size()) {
        out << std::setw(12) << std::setprecision(3) << std::fixed << row.orders[j]
            << std::defaultfloat;
      } else {
        out << std::setw(12) << "-";
      }
    }
    out << std::setprecision(6) << '\n';
  }
  if (table.partial) out << "PARTIAL: " << table.failure << '\n';
}

}  // namespace nsfourier
