#include <iostream>

#include <CLI11.hpp>

#include "runner.hpp"

namespace {

struct SubcommandSpec {
  const char* name;
  const char* help;
  lll::cli::Command command;
  bool needs_config;
};

constexpr SubcommandSpec kSubcommands[] = {
    {"simulate-fock", "Integrate the truncated Fock-coefficient system",
     lll::cli::Command::simulate_fock, true},
    {"simulate-limit", "Integrate the limit system on a dyadic-ray grid",
     lll::cli::Command::simulate_limit, true},
    {"simulate-shell", "Integrate the dyadic shell model",
     lll::cli::Command::simulate_shell, true},
    {"verify-asymptotics", "Compare exact Hamiltonian pieces with their limit equivalents",
     lll::cli::Command::verify_asymptotics, true},
    {"check-gradients", "Check each RHS against the Hamiltonian gradient",
     lll::cli::Command::check_gradients, true},
    {"describe", "Print the active equations, mode, constants and grid",
     lll::cli::Command::describe, false},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lll-lab: spectral dynamics laboratory"};
  app.require_subcommand(1);

  lll::cli::Options options;
  std::string mode;
  lll::cli::Command selected{};

  for (const SubcommandSpec& spec : kSubcommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    auto* config =
        sub->add_option("--config", options.config_path, "JSON config file");
    if (spec.needs_config) config->required();
    sub->add_option("--out", options.out_dir, "Output directory");
    sub->add_option("--mode", mode, "RHS mode: gradient or paper");
    sub->add_option("--seed", options.seed, "Seed for random initial data");
    sub->add_flag("--quiet", options.quiet, "Suppress progress output");
    if (spec.command == lll::cli::Command::describe) {
      sub->add_option("--system", options.describe_system,
                      "System to describe (fock, limit, shell)");
    }
    sub->callback([&selected, &spec] { selected = spec.command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;  // bad invocation is a config error
  }

  if (!mode.empty()) options.mode = mode;

  try {
    return lll::cli::run(selected, options);
  } catch (const lll::cli::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const lll::NumericalError& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
