#include "config.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include "lll/asymptotics.hpp"

namespace lll::cli {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ConfigError("malformed config " + path + ": " + err.what());
  }
}

void require_keys(const json& object, const std::string& section,
                  std::initializer_list<const char*> allowed) {
  if (!object.is_object()) {
    throw ConfigError("config section \"" + section + "\" must be an object");
  }
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("unknown key \"" + item.key() + "\" in section \"" +
                        section + "\"");
    }
  }
}

Complex parse_complex(const json& value, const std::string& where) {
  if (value.is_number()) {
    return Complex(value.get<double>(), 0.0);
  }
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number()) {
    return Complex(value[0].get<double>(), value[1].get<double>());
  }
  throw ConfigError(where + ": expected a number or [re, im] pair");
}

LimitRHSMode parse_mode(const json& system_section,
                        const std::optional<std::string>& override_mode) {
  std::string mode = system_section.value("mode", "gradient");
  if (override_mode) mode = *override_mode;
  if (mode == "gradient" || mode == "gradient_consistent") {
    return LimitRHSMode::gradient_consistent;
  }
  if (mode == "paper" || mode == "paper_literal") {
    return LimitRHSMode::paper_literal;
  }
  throw ConfigError("unknown mode \"" + mode + "\" (use gradient or paper)");
}

namespace {

double require_number(const json& obj, const char* key, const std::string& section) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw ConfigError("section \"" + section + "\" needs numeric key \"" +
                      std::string(key) + "\"");
  }
  return obj[key].get<double>();
}

int require_int(const json& obj, const char* key, const std::string& section) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw ConfigError("section \"" + section + "\" needs integer key \"" +
                      std::string(key) + "\"");
  }
  return obj[key].get<int>();
}

}  // namespace

std::unique_ptr<HamiltonianSystem> build_system(const json& system_section,
                                                Command command,
                                                const std::optional<std::string>& mode) {
  const std::string expected = command == Command::simulate_fock    ? "fock"
                               : command == Command::simulate_limit ? "limit"
                               : command == Command::simulate_shell ? "shell"
                                                                    : "";
  const std::string kind = system_section.value("kind", expected);
  if (!expected.empty() && kind != expected) {
    throw ConfigError("system.kind \"" + kind + "\" does not match the subcommand");
  }

  if (kind == "fock") {
    require_keys(system_section, "system", {"kind", "truncation"});
    return std::make_unique<FockSystem>(require_int(system_section, "truncation", "system"));
  }
  if (kind == "limit") {
    require_keys(system_section, "system",
                 {"kind", "lambda", "rays", "j_min", "j_max", "mode"});
    return std::make_unique<LimitSystem>(
        DyadicGrid::rays(require_int(system_section, "rays", "system"),
                         require_int(system_section, "j_min", "system"),
                         require_int(system_section, "j_max", "system")),
        ModelConstants(require_number(system_section, "lambda", "system")),
        parse_mode(system_section, mode));
  }
  if (kind == "shell") {
    require_keys(system_section, "system",
                 {"kind", "lambda", "j_min", "j_max", "epsilon", "mode"});
    const double epsilon = system_section.contains("epsilon")
                               ? require_number(system_section, "epsilon", "system")
                               : std::log(2.0);
    return std::make_unique<ShellSystem>(
        ModelConstants(require_number(system_section, "lambda", "system")),
        require_int(system_section, "j_min", "system"),
        require_int(system_section, "j_max", "system"), epsilon,
        parse_mode(system_section, mode));
  }
  throw ConfigError("unknown system.kind \"" + kind + "\"");
}

Profile parse_profile(const json& section, const std::string& where) {
  if (!section.is_object() || !section.contains("kind")) {
    throw ConfigError(where + ": profile needs a \"kind\"");
  }
  const std::string kind = section["kind"].get<std::string>();
  if (kind == "smooth_bump") {
    require_keys(section, where, {"kind", "s_lo", "s_hi", "amplitude", "flatness"});
    const Complex amplitude = section.contains("amplitude")
                                  ? parse_complex(section["amplitude"], where)
                                  : Complex(1.0, 0.0);
    return smooth_bump(require_number(section, "s_lo", where),
                       require_number(section, "s_hi", where), amplitude,
                       section.value("flatness", 1.0));
  }
  if (kind == "gaussian_bump") {
    require_keys(section, where, {"kind", "center", "width", "amplitude"});
    const Complex amplitude = section.contains("amplitude")
                                  ? parse_complex(section["amplitude"], where)
                                  : Complex(1.0, 0.0);
    return gaussian_bump(require_number(section, "center", where),
                         require_number(section, "width", where), amplitude);
  }
  throw ConfigError(where + ": unknown profile kind \"" + kind + "\"");
}

namespace {

StateVector random_tail_state(const HamiltonianSystem& system, Complex a,
                              double amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  StateVector z(system.dimension(), Complex{});
  z[0] = a;
  for (std::size_t i = 1; i < z.size(); ++i) {
    const double r = amplitude * std::sqrt(unit(rng));
    const double phase = 2.0 * M_PI * unit(rng);
    z[i] = std::polar(r, phase);
  }
  return z;
}

}  // namespace

StateVector build_initial_state(const json& initial_section,
                                const HamiltonianSystem& system, Command command,
                                std::uint64_t seed) {
  require_keys(initial_section, "initial_data",
               {"a", "values", "profile", "random", "ansatz"});
  const Complex a = initial_section.contains("a")
                        ? parse_complex(initial_section["a"], "initial_data.a")
                        : Complex{};

  int sources = 0;
  for (const char* key : {"values", "profile", "random", "ansatz"}) {
    sources += initial_section.contains(key) ? 1 : 0;
  }
  if (sources > 1) {
    throw ConfigError(
        "initial_data: give at most one of values/profile/random/ansatz");
  }

  StateVector z(system.dimension(), Complex{});
  z[0] = a;

  if (initial_section.contains("values")) {
    const json& values = initial_section["values"];
    const std::size_t expected =
        command == Command::simulate_fock ? system.dimension() : system.dimension() - 1;
    if (!values.is_array() || values.size() != expected) {
      throw ConfigError("initial_data.values: expected an array of " +
                        std::to_string(expected) + " entries");
    }
    const std::size_t offset = command == Command::simulate_fock ? 0 : 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      z[i + offset] = parse_complex(values[i], "initial_data.values");
    }
    if (command == Command::simulate_fock && initial_section.contains("a")) {
      throw ConfigError("initial_data: fock literal values already fix c_0; drop \"a\"");
    }
    return z;
  }

  if (initial_section.contains("random")) {
    const json& spec = initial_section["random"];
    require_keys(spec, "initial_data.random", {"amplitude"});
    return random_tail_state(system, a, require_number(spec, "amplitude", "random"),
                             seed);
  }

  if (initial_section.contains("ansatz")) {
    if (command != Command::simulate_fock) {
      throw ConfigError("initial_data.ansatz applies to the fock system only");
    }
    const json& spec = initial_section["ansatz"];
    require_keys(spec, "initial_data.ansatz", {"lambda", "profile"});
    const int lambda = require_int(spec, "lambda", "initial_data.ansatz");
    const Profile profile = parse_profile(spec["profile"], "initial_data.ansatz.profile");
    const int N = static_cast<int>(system.dimension()) - 1;
    const auto samples = sample_profile(profile, lambda, N);
    const FockState state = ansatz_coefficients(a, samples, lambda, N);
    return StateVector(state.c.begin(), state.c.end());
  }

  if (initial_section.contains("profile")) {
    if (command == Command::simulate_fock) {
      throw ConfigError("initial_data.profile applies to grid systems; use ansatz for fock");
    }
    const json& spec = initial_section["profile"];
    const std::string kind = spec.value("kind", "");
    const auto* limit = dynamic_cast<const LimitSystem*>(&system);
    const DyadicGrid& grid = limit->grid();
    if (kind == "single_shell") {
      require_keys(spec, "initial_data.profile", {"kind", "level", "amplitude"});
      const int level = require_int(spec, "level", "profile");
      if (level < grid.j_min() || level > grid.j_max()) {
        throw ConfigError("single_shell level outside the grid range");
      }
      z[1 + grid.index(0, level)] =
          parse_complex(spec["amplitude"], "profile.amplitude");
      return z;
    }
    if (kind == "two_mode") {
      require_keys(spec, "initial_data.profile",
                   {"kind", "level_a", "amplitude_a", "level_b", "amplitude_b"});
      for (const auto& [lk, ak] :
           {std::pair{"level_a", "amplitude_a"}, std::pair{"level_b", "amplitude_b"}}) {
        const int level = require_int(spec, lk, "profile");
        if (level < grid.j_min() || level > grid.j_max()) {
          throw ConfigError("two_mode level outside the grid range");
        }
        z[1 + grid.index(0, level)] += parse_complex(spec[ak], "profile");
      }
      return z;
    }
    const Profile profile = parse_profile(spec, "initial_data.profile");
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
      z[1 + idx] = profile(grid.frequency(idx));
    }
    return z;
  }

  return z;  // condensate only
}

EvolveOptions parse_integrator(const json& config) {
  EvolveOptions opts;
  if (config.contains("integrator")) {
    const json& section = config["integrator"];
    require_keys(section, "integrator",
                 {"scheme", "dt", "t_end", "observe_every", "tol", "max_iter"});
    const std::string scheme = section.value("scheme", "rk4");
    if (scheme == "rk4") {
      opts.scheme = Scheme::rk4;
    } else if (scheme == "implicit_midpoint") {
      opts.scheme = Scheme::implicit_midpoint;
    } else {
      throw ConfigError("unknown integrator.scheme \"" + scheme + "\"");
    }
    opts.dt = section.value("dt", opts.dt);
    opts.t_end = section.value("t_end", opts.t_end);
    opts.observe_every = section.value("observe_every", opts.observe_every);
    opts.midpoint_tol = section.value("tol", opts.midpoint_tol);
    opts.midpoint_max_iter = section.value("max_iter", opts.midpoint_max_iter);
  }
  if (config.contains("observables")) {
    const json& section = config["observables"];
    require_keys(section, "observables", {"alpha"});
    opts.observables.alpha = section.value("alpha", opts.observables.alpha);
  }
  if (!(opts.dt > 0.0) || !(opts.t_end > 0.0)) {
    throw ConfigError("integrator: dt and t_end must be positive");
  }
  if (opts.observe_every < 1) {
    throw ConfigError("integrator: observe_every must be >= 1");
  }
  return opts;
}

}  // namespace lll::cli
