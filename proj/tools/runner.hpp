#pragma once

#include "config.hpp"

namespace lll::cli {

/// Executes a configured command and writes its outputs atomically
/// (temp file + rename).  Returns the process exit code: 0 on success,
/// 3 when a run ends in a blow-up (partial outputs are still written).
/// Config problems throw ConfigError (exit 2), numerical failures throw
/// NumericalError (exit 3).
int run(Command command, const Options& options);

}  // namespace lll::cli
