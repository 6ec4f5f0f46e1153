#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/harness.hpp"
#include "nsfourier/kernels.hpp"
#include "nsfourier/snapshot.hpp"
#include "nsfourier/sweep.hpp"

namespace nsfourier::harness {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + item + "' in " + what);
    }
  }
  return out;
}

void apply_simd(const std::string& name) {
  if (!kernels::select(name)) throw ConfigError("SIMD variant '" + name + "' not available");
}

// Shared stepper flags of simulate and converge.
struct StepperFlags {
  double tau = 0.001;
  double nu = 0.0;
  int truncation = -1;
  std::string scheme = "picard";
  double tolerance = 1e-10;
  int max_iterations = 200;

  void add(CLI::App* app) {
    app->add_option("--tau", tau, "time step")->capture_default_str();
    app->add_option("--nu", nu, "viscosity")->capture_default_str();
    app->add_option("--truncation", truncation, "Fourier truncation N (-1: M/2-1)")->capture_default_str();
    app->add_option("--scheme", scheme, "picard | krylov | explicit")->capture_default_str();
    app->add_option("--tolerance", tolerance, "Picard / Krylov stopping tolerance")->capture_default_str();
    app->add_option("--max-iterations", max_iterations, "Picard iteration cap")->capture_default_str();
  }

  StepperConfig config() const {
    StepperConfig c;
    c.tau = tau;
    c.nu = nu;
    c.truncation = truncation;
    c.scheme = parse_scheme(scheme);
    c.tolerance = tolerance;
    c.max_iterations = max_iterations;
    return c;
  }
};

// Splices `--config FILE` into `--key=value` arguments placed before the explicit flags,
// so flags given on the command line win (options take the last value).
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> head;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    std::string file;
    if (a == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file name");
      file = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      file = a.substr(9);
    } else {
      rest.push_back(a);
      continue;
    }
    for (const auto& [key, value] : read_config(file)) head.push_back("--" + key + "=" + value);
  }
  // the subcommand name stays first
  std::vector<std::string> out;
  if (!rest.empty()) out.push_back(rest.front());
  out.insert(out.end(), head.begin(), head.end());
  if (rest.size() > 1) out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

int report(std::ostream& err, const std::exception& e, int code) {
  err << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-spectral solver for the 2D incompressible Euler / Navier-Stokes equations"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  const std::string config_help = "flat key=value file; flags given on the command line override it";

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a scenario, write snapshots and diagnostics");
  RunManifest manifest;
  StepperFlags sim_flags;
  std::string out_dir = "run";
  std::string sim_simd = "auto";
  std::string dummy_config;
  sim->add_option("--scenario", manifest.scenario,
                  "taylor-green | double-shear | gaussian-vortices | manufactured")
      ->required();
  sim->add_option("--m", manifest.params.taylor_green_m, "Taylor-Green family exponent")->capture_default_str();
  sim->add_option("--rho0", manifest.params.shear_width, "double shear layer width")->capture_default_str();
  sim->add_option("--grid", manifest.grid_points, "grid points per axis M")->capture_default_str();
  sim_flags.add(sim);
  sim->add_option("--T", manifest.horizon, "final time")->capture_default_str();
  sim->add_option("--out", out_dir, "output directory")->capture_default_str();
  auto* snaps = sim->add_option("--snapshots", manifest.snapshots, "number of snapshot frames after t=0")
                    ->check(CLI::PositiveNumber)
                    ->capture_default_str();
  auto* cadence =
      sim->add_option("--cadence", manifest.cadence, "steps between snapshots")->check(CLI::PositiveNumber);
  snaps->excludes(cadence);
  sim->add_option("--norms", manifest.norms, "norm list; H<s> entries add diagnostics columns")
      ->capture_default_str();
  sim->add_option("--seed", manifest.seed, "recorded in the manifest")->capture_default_str();
  sim->add_option("--simd", sim_simd, "auto | scalar | avx2")->capture_default_str();
  sim->add_option("--config", dummy_config, config_help);

  // converge
  auto* conv = app.add_subcommand("converge", "convergence sweep against the manufactured solution");
  StepperFlags conv_flags;
  std::string vary;
  double base = 0.0;
  int halvings = 0;
  std::string values_text;
  std::string nu_values_text;
  int conv_grid = 128;
  double conv_T = 1.0;
  std::string conv_norms = "L2,Linf,H1,H6";
  std::string conv_scenario = "manufactured";
  std::string conv_out;
  int jobs = 1;
  std::string conv_simd = "auto";
  conv->add_option("--vary", vary, "tau | nu | resolution")->required();
  auto* base_opt = conv->add_option("--base", base, "first value of a halving sequence");
  auto* halv_opt = conv->add_option("--halvings", halvings, "number of values base/2^k");
  auto* values_opt = conv->add_option("--values", values_text, "explicit comma-separated values");
  base_opt->needs(halv_opt);
  halv_opt->needs(base_opt);
  values_opt->excludes(base_opt);
  conv->add_option("--nu-values", nu_values_text, "resolution sweeps: comma-separated viscosities");
  conv->add_option("--grid", conv_grid, "grid points per axis M")->capture_default_str();
  conv_flags.add(conv);
  conv->add_option("--T", conv_T, "final time")->capture_default_str();
  conv->add_option("--norms", conv_norms, "error norms")->capture_default_str();
  conv->add_option("--scenario", conv_scenario, "scenario with an exact solution")->capture_default_str();
  conv->add_option("--out", conv_out, "table CSV path (default converge_<vary>.csv)");
  conv->add_option("--jobs", jobs, "simulations run concurrently")->capture_default_str();
  conv->add_option("--simd", conv_simd, "auto | scalar | avx2")->capture_default_str();
  conv->add_option("--config", dummy_config, config_help);

  // verify
  auto* ver = app.add_subcommand("verify", "fast invariant checks");
  bool list = false;
  std::vector<std::string> checks;
  CheckOptions check_opts;
  double check_tau = 0.0;
  double check_nu = 0.0;
  ver->add_flag("--list", list, "list available checks");
  ver->add_option("--check", checks, "run only this check (repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* tau_opt = ver->add_option("--tau", check_tau, "time step for the contraction check");
  auto* nu_opt = ver->add_option("--nu", check_nu, "viscosity for the contraction check");
  ver->add_option("--seed", check_opts.seed, "random seed")->capture_default_str();

  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    args = expand_config(args);
  } catch (const ConfigError& e) {
    return report(err, e, kExitUsage);
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (sim->parsed()) {
      apply_simd(sim_simd);
      manifest.stepper = sim_flags.config();
      manifest.out_dir = out_dir;
      manifest.simd = sim_simd;
      const SimulateSummary s = simulate(manifest, out);
      return s.energy.clean() ? kExitOk : kExitFailure;
    }
    if (conv->parsed()) {
      apply_simd(conv_simd);
      SweepSpec spec;
      spec.vary = parse_sweep_axis(vary);
      if (*values_opt) {
        spec.values = parse_list(values_text, "--values");
      } else if (*base_opt) {
        if (halvings < 1) throw ConfigError("--halvings must be >= 1");
        spec.values = halving_sequence(base, halvings);
      } else {
        throw ConfigError("give --values or --base with --halvings");
      }
      if (!nu_values_text.empty()) {
        if (spec.vary != SweepAxis::Resolution) throw ConfigError("--nu-values only applies to resolution sweeps");
        spec.nu_values = parse_list(nu_values_text, "--nu-values");
      }
      spec.fixed = conv_flags.config();
      spec.grid_points = conv_grid;
      spec.horizon = conv_T;
      spec.norms = parse_norm_list(conv_norms);
      spec.scenario = conv_scenario;
      spec.jobs = jobs;
      const std::string path = conv_out.empty() ? "converge_" + to_string(spec.vary) + ".csv" : conv_out;
      const SweepTable table = convergence_sweep(spec);
      std::ofstream csv(path);
      if (!csv) throw ConfigError("cannot write " + path);
      write_table_csv(csv, spec, table);
      print_table(out, spec, table);
      out << "wrote " << path << '\n';
      if (table.partial) {
        err << "error: sweep incomplete: " << table.failure << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }
    if (ver->parsed()) {
      if (list) {
        for (const auto& c : available_checks()) out << c.name << "  " << c.description << '\n';
        return kExitOk;
      }
      if (*tau_opt) check_opts.tau = check_tau;
      if (*nu_opt) check_opts.nu = check_nu;
      if (checks.empty()) {
        for (const auto& c : available_checks()) checks.push_back(c.name);
      }
      std::vector<std::string> failed;
      for (const auto& name : checks) {
        const CheckResult r = run_check(name, check_opts);
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        if (!r.passed) failed.push_back(r.name);
      }
      if (!failed.empty()) {
        err << "violated invariants:";
        for (const auto& f : failed) err << ' ' << f;
        err << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    return report(err, e, kExitUsage);
  } catch (const std::exception& e) {
    return report(err, e, kExitFailure);
  }
  return kExitUsage;
}

}  // namespace nsfourier::harness
