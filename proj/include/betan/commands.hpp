#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace betan::cli {

/// Exit codes: 0 success, 1 usage error (bad flags, syntax, unreadable
/// file), 2 domain error (a violated precondition of the operation).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

struct Output {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one invocation; `args` excludes the program name. Never throws.
Output run(const std::vector<std::string>& args);

/// Required keys and their JSON types for the machine block of `command`.
/// Returns false for an unknown command or a block missing a key or with a
/// key of the wrong type.
bool validate_machine_block(const std::string& command,
                            const nlohmann::json& block);

/// Names of all subcommands.
std::vector<std::string> command_names();

}  // namespace betan::cli
