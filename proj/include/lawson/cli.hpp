#pragma once

#include "lawson/render.hpp"

#include <optional>
#include <string>

namespace lawson {

enum class Command { table, hom, griffiths, check_invariance, validate };

std::optional<Command> command_from_name(const std::string& name);

struct RunConfig {
  std::string input_path;
  Command command = Command::table;
  std::string target;
  Format format = Format::tsv;
  std::optional<int> p;
  std::optional<int> k;
  /// Cycle dimension for `griffiths`.
  std::optional<int> griffiths_p;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse_error = 2;
inline constexpr int check_failure = 3;
} // namespace exit_code

struct RunResult {
  int status = exit_code::ok;
  std::string output;
  std::string error;
};

/// Runs one command over `source` (the text of the construction file).
RunResult run_source(const RunConfig& config, const std::string& source);

/// Reads config.input_path and runs the command over it.
RunResult run(const RunConfig& config);

} // namespace lawson
