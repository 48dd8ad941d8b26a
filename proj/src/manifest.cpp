#include "anglekit/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "anglekit/rational.hpp"

namespace anglekit {

std::string library_version() {
#ifdef ANGLEKIT_VERSION
  return ANGLEKIT_VERSION;
#else
  return "unknown";
#endif
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool RunManifest::pass() const {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

std::string RunManifest::config_hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(command + "\n" + config.dump())));
  return buf;
}

nlohmann::json RunManifest::results() const {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : reports) reps.push_back(r.to_json());
  return {{"pass", pass()}, {"reports", reps}, {"data", data}};
}

nlohmann::json RunManifest::to_json() const {
  return {{"command", command},   {"config", config},     {"config_hash", config_hash()},
          {"version", library_version()}, {"started", started}, {"finished", finished},
          {"results", results()}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.config = j.at("config");
  m.started = j.value("started", "");
  m.finished = j.value("finished", "");
  if (j.contains("results")) m.data = j.at("results").value("data", nlohmann::json::object());
  return m;
}

std::string RunManifest::append_to(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  auto path = std::filesystem::path(dir) / (command + "-" + config_hash() + ".jsonl");
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot write report file " + path.string());
  out << to_json().dump() << "\n";
  return path.string();
}

}  // namespace anglekit
