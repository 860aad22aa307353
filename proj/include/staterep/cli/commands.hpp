#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "staterep/cli/experiment.hpp"

namespace staterep::cli {

// Exit codes shared by the command layer and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIncident = 2;
inline constexpr int kExitReplayMismatch = 3;

// Executes every grid cell of the experiment file, writes JSONL episode
// logs per condition, a CSV+Markdown report, and a manifest hashing every
// artifact. Returns kExitIncident when any episode aborted on transport.
int cmd_run(const std::filesystem::path& config_path, const RunOverrides& overrides,
            std::ostream& out);

// Bootstrap comparison of two log directories (or .jsonl files) holding
// episodes from the same environment.
int cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b,
                std::ostream& out);

// Re-executes each record's actions and verifies rewards and termination;
// prints the first divergent step on mismatch.
int cmd_replay(const std::filesystem::path& log_path, std::ostream& out);

}  // namespace staterep::cli
