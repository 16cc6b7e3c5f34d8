#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace qkcli {

// Outcome record of one command run. Serialized to stdout when the command
// wrote its artifacts to files; suppressed when the artifact itself went to
// stdout. Exit status is 0 iff every named check passed.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> outputs;
  std::vector<std::pair<std::string, bool>> checks;
  std::uint64_t wall_time_ms = 0;

  void check(const std::string& name, bool passed) {
    checks.emplace_back(name, passed);
  }
  bool all_passed() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

// Writes content, creating parent directories. Throws std::runtime_error
// naming the path on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

// Machine-readable failure on stderr; returns a nonzero exit code.
int fail(const std::string& command, const std::string& error,
         nlohmann::json extra = nlohmann::json::object());

// Validates the outputs-exist invariant, prints the report when files were
// written, reports failed checks on stderr. Returns the process exit code.
int finish(RunReport& report, std::uint64_t wall_ms);

}  // namespace qkcli
