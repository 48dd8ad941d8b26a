#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "anglekit/report.hpp"

namespace anglekit {

std::string library_version();
std::uint64_t fnv1a64(const std::string& bytes);
/// UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

/// One command invocation: configuration, timing and outcomes.
struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();  // everything that determines the results
  std::string started, finished;
  std::vector<CheckReport> reports;
  nlohmann::json data = nlohmann::json::object();    // computed values beyond the checks

  bool pass() const;
  /// 16 hex digits of fnv1a64 over the command and the serialized config.
  std::string config_hash() const;
  /// Everything except the timestamps; equal for replays of the same config.
  nlohmann::json results() const;
  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
  /// Appends one JSON line to <dir>/<command>-<hash>.jsonl and returns the path.
  std::string append_to(const std::string& dir) const;
};

}  // namespace anglekit
