#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace heckecells {

enum class OutputFormat { Text, Machine, Dot };

struct CommandConfig {
  std::string command;
  std::string system;  // preset name, path, or "b2-p2-fixture"
  std::optional<std::string> subset;
  std::optional<int> p;
  std::optional<std::string> table;
  std::string side = "right";
  std::optional<OutputFormat> format;
  std::optional<std::string> out;
  bool all = false;
  std::vector<std::string> theorems;
  std::optional<std::string> target;
  std::optional<std::string> fixtures;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int violation = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Runs one command. Output goes to `out` (or the --out file), diagnostics
/// to `err`. Returns 0 when everything requested passed or was skipped, 1 on
/// any violation or fixture mismatch, 2 on usage and input errors.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heckecells
