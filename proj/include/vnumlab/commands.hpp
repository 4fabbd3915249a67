#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnumlab/io.hpp"

namespace vnumlab {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitVerificationFailure = 3;

struct CommandResult {
  Json json;
  std::optional<std::string> csv;  // absent when the command has no tabular form
  int exit_code = kExitOk;
};

struct RunOptions {
  std::optional<std::filesystem::path> cache_dir;
};

// Commands: ass, vnumber, indeg, family, probe, oracle, verify-golden,
// reduction-check, check, ideal.
const std::vector<std::string>& command_names();

/// Runs `command` on `doc`. verify-golden ignores the document. Domain errors
/// propagate as Error; unmet verifications set exit_code to 3.
CommandResult run_command(const ProblemDocument& doc, std::string_view command,
                          const RunOptions& run = {});
CommandResult run_verify_golden();

/// Serializes a result; JSON is pretty-printed with sorted keys and a final
/// newline. Throws Error("unsupported-format") for csv without a table.
std::string render(const CommandResult& result, std::string_view format);

}  // namespace vnumlab
