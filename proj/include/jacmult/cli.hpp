#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace jacmult::cli {

/// Outcome of one invocation. `status` is "ok", "check_failed" (an internal
/// cross-check or validation failed) or "error".
struct CommandResult {
  std::string subcommand;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  std::string status = "ok";
  std::string message;
  std::string format = "text";
  int exit_code = 0;

  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] std::string render() const { return format == "json" ? to_json() : to_text(); }
};

/// Runs one command line (without the program name).
CommandResult run(std::span<const std::string> args);

/// Entry point used by the executable: prints the rendered result.
int main(int argc, const char* const* argv);

}  // namespace jacmult::cli
