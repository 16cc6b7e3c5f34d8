#include "report.hpp"

#include <fstream>
#include <iostream>

namespace qkcli {

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["outputs"] = outputs;
  nlohmann::json cj = nlohmann::json::array();
  for (const auto& [name, ok] : checks)
    cj.push_back({{"name", name}, {"passed", ok}});
  j["checks_passed"] = std::move(cj);
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

int fail(const std::string& command, const std::string& error,
         nlohmann::json extra) {
  extra["command"] = command;
  extra["error"] = error;
  std::cerr << extra.dump() << "\n";
  return 1;
}

int finish(RunReport& report, std::uint64_t wall_ms) {
  report.wall_time_ms = wall_ms;
  for (const std::string& path : report.outputs) {
    std::error_code ec;
    auto size = std::filesystem::file_size(path, ec);
    if (ec || size == 0)
      return fail(report.command, "missing or empty output: " + path);
  }
  if (!report.outputs.empty())
    std::cout << report.to_json().dump() << "\n";
  if (!report.all_passed()) {
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& [name, ok] : report.checks)
      if (!ok) failed.push_back(name);
    return fail(report.command, "checks failed", {{"failed_checks", failed}});
  }
  return 0;
}

}  // namespace qkcli
