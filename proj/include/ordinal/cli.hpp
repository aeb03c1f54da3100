#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ordinal/simulate.hpp"

namespace ordinal::cli {

// 0 = verdicts produced (failing axioms included), 1 = internal error,
// 2 = usage or input error, 3 = --strict-dlo and some of A4-A6 failed.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kStrictDloFailed = 3,
};

inline constexpr const char* kSeedEnvVar = "ORDINAL_GATE_SEED";

/// Built-in defaults, then the JSON config file, then the seed environment
/// variable (only if the file set no seed), then explicit flags.
SimulationConfig resolve_config(const std::optional<std::filesystem::path>& config_path,
                                std::optional<std::uint32_t> seed_flag,
                                std::optional<int> n_flag);

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordinal::cli
