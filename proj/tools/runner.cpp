#include "runner.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <vector>

#include "lll/asymptotics.hpp"
#include "lll/diagnostics.hpp"

namespace lll::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write output file " + tmp.string());
    }
    out << content;
  }
  fs::rename(tmp, path);
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json state_to_json(const StateVector& z) {
  json out = json::array();
  for (const Complex& v : z) out.push_back(complex_to_json(v));
  return out;
}

json observables_to_json(const Observables& o) {
  return json{{"M", o.mass},       {"E", o.energy},
              {"H", o.hamiltonian}, {"xalpha", o.xalpha},
              {"front_p50", o.front_lo}, {"front_p90", o.front_hi}};
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string csv = "t,re_a,im_a,M,E,H,xalpha,front_p50,front_p90\n";
  for (std::size_t i = 0; i < traj.rows(); ++i) {
    const Observables& o = traj.observables[i];
    const Complex a = traj.states[i][0];
    csv += format_double(traj.times[i]) + "," + format_double(a.real()) + "," +
           format_double(a.imag()) + "," + format_double(o.mass) + "," +
           format_double(o.energy) + "," + format_double(o.hamiltonian) + "," +
           format_double(o.xalpha) + "," + format_double(o.front_lo) + "," +
           format_double(o.front_hi) + "\n";
  }
  return csv;
}

struct OutputPaths {
  fs::path csv;
  fs::path snapshots;
};

OutputPaths output_paths(const json& config, const Options& options,
                         const std::string& default_stem) {
  std::string csv_name = default_stem + ".csv";
  std::string json_name = default_stem + ".json";
  if (config.contains("output")) {
    require_keys(config["output"], "output", {"csv", "snapshots"});
    csv_name = config["output"].value("csv", csv_name);
    json_name = config["output"].value("snapshots", json_name);
  }
  return OutputPaths{fs::path(options.out_dir) / csv_name,
                     fs::path(options.out_dir) / json_name};
}

int run_simulate(Command command, const Options& options) {
  const json config = load_json(options.config_path);
  require_keys(config, "config",
               {"system", "initial_data", "integrator", "observables", "output"});
  if (!config.contains("system")) {
    throw ConfigError("config needs a \"system\" section");
  }
  const auto system = build_system(config["system"], command, options.mode);
  const json initial =
      config.contains("initial_data") ? config["initial_data"] : json::object();
  StateVector z0 = build_initial_state(initial, *system, command, options.seed);
  const EvolveOptions evolve_opts = parse_integrator(config);

  const Trajectory traj = evolve(*system, std::move(z0), evolve_opts);

  const OutputPaths paths = output_paths(config, options, "trajectory");
  write_file_atomic(paths.csv, trajectory_csv(traj));

  json sidecar;
  sidecar["system"] = config["system"];
  sidecar["dt"] = evolve_opts.dt;
  sidecar["scheme"] = evolve_opts.scheme == Scheme::rk4 ? "rk4" : "implicit_midpoint";
  sidecar["blow_up"] = traj.blew_up;
  if (traj.blew_up) {
    sidecar["failure_time"] = traj.failure_time;
    sidecar["failure_message"] = traj.failure_message;
  }
  json snapshots = json::array();
  for (std::size_t i = 0; i < traj.rows(); ++i) {
    snapshots.push_back(json{{"t", traj.times[i]},
                             {"state", state_to_json(traj.states[i])},
                             {"observables", observables_to_json(traj.observables[i])}});
  }
  sidecar["snapshots"] = std::move(snapshots);
  sidecar["final"] =
      json{{"t", traj.final_time}, {"state", state_to_json(traj.final_state)}};
  write_file_atomic(paths.snapshots, sidecar.dump(2) + "\n");

  if (!options.quiet) {
    std::cout << (traj.blew_up ? traj.failure_message
                               : "run complete: t = " + format_double(traj.final_time))
              << "\n"
              << "wrote " << paths.csv.string() << " (" << traj.rows() << " rows), "
              << paths.snapshots.string() << "\n";
  }
  return traj.blew_up ? 3 : 0;
}

int run_verify(const Options& options) {
  const json config = load_json(options.config_path);
  require_keys(config, "config", {"verify", "output"});
  if (!config.contains("verify")) {
    throw ConfigError("config needs a \"verify\" section");
  }
  const json& section = config["verify"];
  require_keys(section, "verify", {"lambdas", "k_max", "a", "profile", "quad_tol"});
  if (!section.contains("lambdas") || !section["lambdas"].is_array()) {
    throw ConfigError("verify.lambdas must be an array of integers");
  }
  std::vector<int> lambdas;
  for (const auto& v : section["lambdas"]) lambdas.push_back(v.get<int>());
  const double k_max = section.value("k_max", 2.5);
  const double quad_tol = section.value("quad_tol", 1e-10);
  const Complex a = section.contains("a") ? parse_complex(section["a"], "verify.a")
                                          : Complex(1.0, 0.0);
  const Profile profile =
      section.contains("profile")
          ? parse_profile(section["profile"], "verify.profile")
          : smooth_bump(0.5, 2.5, Complex(1.0, 0.0), 1.0);

  const auto rows = asymptotics_sweep(a, profile, lambdas, k_max, quad_tol);

  std::string csv = "lambda,H2,h2,ratio2,H3,h3,ratio3,H4,h4,ratio4\n";
  json jrows = json::array();
  for (const auto& r : rows) {
    csv += format_double(r.lambda) + "," + format_double(r.H2) + "," +
           format_double(r.h2) + "," + format_double(r.ratio2()) + "," +
           format_double(r.H3) + "," + format_double(r.h3) + "," +
           format_double(r.ratio3()) + "," + format_double(r.H4) + "," +
           format_double(r.h4) + "," + format_double(r.ratio4()) + "\n";
    jrows.push_back(json{{"lambda", r.lambda},
                         {"H2", r.H2},
                         {"h2", r.h2},
                         {"ratio2", r.ratio2()},
                         {"H3", r.H3},
                         {"h3", r.h3},
                         {"ratio3", r.ratio3()},
                         {"H4", r.H4},
                         {"h4", r.h4},
                         {"ratio4", r.ratio4()}});
  }
  const OutputPaths paths = output_paths(config, options, "asymptotics");
  write_file_atomic(paths.csv, csv);
  write_file_atomic(paths.snapshots, json{{"rows", jrows}}.dump(2) + "\n");

  if (!options.quiet) {
    std::printf("%8s %14s %14s %14s\n", "lambda", "|H2/h2-1|", "|H3/h3-1|",
                "|H4/h4-1|");
    for (const auto& r : rows) {
      std::printf("%8g %14.6e %14.6e %14.6e\n", r.lambda,
                  std::abs(r.ratio2() - 1.0), std::abs(r.ratio3() - 1.0),
                  std::abs(r.ratio4() - 1.0));
    }
    std::cout << "wrote " << paths.csv.string() << ", " << paths.snapshots.string()
              << "\n";
  }
  return 0;
}

int run_check_gradients(const Options& options) {
  const json config = load_json(options.config_path);
  require_keys(config, "config", {"system", "check", "output"});
  if (!config.contains("system")) {
    throw ConfigError("config needs a \"system\" section");
  }
  double amplitude = 0.5;
  double fd_step = 1e-5;
  if (config.contains("check")) {
    require_keys(config["check"], "check", {"amplitude", "fd_step"});
    amplitude = config["check"].value("amplitude", amplitude);
    fd_step = config["check"].value("fd_step", fd_step);
  }
  const std::string kind = config["system"].value("kind", "");
  const Command command = kind == "fock"    ? Command::simulate_fock
                          : kind == "limit" ? Command::simulate_limit
                                            : Command::simulate_shell;

  json jmodes = json::object();
  for (const char* mode : {"gradient", "paper"}) {
    Options with_mode = options;
    with_mode.mode = mode;
    const auto system = build_system(config["system"], command, with_mode.mode);
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    StateVector z(system->dimension());
    for (auto& v : z) {
      v = std::polar(amplitude * std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng));
    }
    const FlowConsistencyReport report = flow_consistency_check(*system, z, fd_step);
    if (!options.quiet) {
      std::printf("%-8s mode: max rel error %.3e (worst coordinate %zu)\n", mode,
                  report.max_rel_error, report.worst_index);
    }
    jmodes[mode] = json{{"max_rel_error", report.max_rel_error},
                        {"worst_index", report.worst_index},
                        {"scale", report.scale}};
    if (kind == "fock") break;  // mode is a grid-system notion
  }
  const OutputPaths paths = output_paths(config, options, "gradients");
  write_file_atomic(paths.snapshots, jmodes.dump(2) + "\n");
  if (!options.quiet) {
    std::cout << "wrote " << paths.snapshots.string() << "\n";
  }
  return 0;
}

int run_describe(const Options& options) {
  if (!options.config_path.empty()) {
    const json config = load_json(options.config_path);
    if (!config.contains("system")) {
      throw ConfigError("config needs a \"system\" section");
    }
    const std::string kind = config["system"].value("kind", "");
    const Command command = kind == "fock"    ? Command::simulate_fock
                            : kind == "limit" ? Command::simulate_limit
                                              : Command::simulate_shell;
    const auto system = build_system(config["system"], command, options.mode);
    std::cout << system->describe();
    return 0;
  }
  const std::string which = options.describe_system;
  const ModelConstants constants(8.0);
  if (which.empty() || which == "fock") {
    std::cout << FockSystem(64).describe() << "\n";
  }
  if (which.empty() || which == "limit") {
    std::cout << LimitSystem(DyadicGrid::rays(4, -2, 6), constants).describe() << "\n";
  }
  if (which.empty() || which == "shell") {
    std::cout << ShellSystem(constants, 0, 7, std::log(2.0)).describe();
  }
  if (!which.empty() && which != "fock" && which != "limit" && which != "shell") {
    throw ConfigError("unknown system \"" + which + "\" (use fock, limit or shell)");
  }
  return 0;
}

}  // namespace

int run(Command command, const Options& options) {
  switch (command) {
    case Command::simulate_fock:
    case Command::simulate_limit:
    case Command::simulate_shell:
      return run_simulate(command, options);
    case Command::verify_asymptotics:
      return run_verify(options);
    case Command::check_gradients:
      return run_check_gradients(options);
    case Command::describe:
      return run_describe(options);
  }
  return 2;
}

}  // namespace lll::cli
