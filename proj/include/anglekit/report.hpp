#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace anglekit {

/// Estimates agree when |computed - expected| <= max(4 sigma, 1e-3).
inline constexpr double kSigmaMultiple = 4.0;
inline constexpr double kAbsoluteFloor = 1e-3;
double tolerance_for(double sigma);

struct CheckResult {
  std::string claim;
  double computed = 0.0;
  double expected = 0.0;
  double sigma = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool informational = false;  // reported but not counted towards the verdict

  /// Statistical comparison at tolerance_for(sigma).
  static CheckResult compare(std::string claim, double computed, double expected, double sigma);
  /// Exact comparison of already-decided outcome.
  static CheckResult exact(std::string claim, double computed, double expected, bool pass);
  nlohmann::json to_json() const;
};

struct CheckReport {
  std::string claim;  // what the whole report verifies
  std::vector<CheckResult> checks;
  nlohmann::json details = nlohmann::json::object();

  bool pass() const;
  std::size_t failures() const;
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(const CheckReport& other);
  nlohmann::json to_json() const;
};

}  // namespace anglekit
