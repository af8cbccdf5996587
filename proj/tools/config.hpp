#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lll/integrate.hpp"
#include "lll/profiles.hpp"
#include "lll/system.hpp"

namespace lll::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command {
  simulate_fock,
  simulate_limit,
  simulate_shell,
  verify_asymptotics,
  check_gradients,
  describe,
};

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::string> mode;  // "gradient" | "paper", overrides the config
  std::uint64_t seed = 0;
  bool quiet = false;
  std::string describe_system;  // describe without a config file
};

nlohmann::json load_json(const std::string& path);

/// Rejects keys outside `allowed`; the error names the offending key.
void require_keys(const nlohmann::json& object, const std::string& section,
                  std::initializer_list<const char*> allowed);

lll::Complex parse_complex(const nlohmann::json& value, const std::string& where);

LimitRHSMode parse_mode(const nlohmann::json& system_section,
                        const std::optional<std::string>& override_mode);

/// System factory from the config "system" section (+ --mode override).
std::unique_ptr<HamiltonianSystem> build_system(const nlohmann::json& system_section,
                                                Command command,
                                                const std::optional<std::string>& mode);

/// Initial flat state from the "initial_data" section.
StateVector build_initial_state(const nlohmann::json& initial_section,
                                const HamiltonianSystem& system, Command command,
                                std::uint64_t seed);

EvolveOptions parse_integrator(const nlohmann::json& config);

Profile parse_profile(const nlohmann::json& section, const std::string& where);

}  // namespace lll::cli
