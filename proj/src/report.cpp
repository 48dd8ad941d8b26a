#include "anglekit/report.hpp"

#include <algorithm>
#include <cmath>

namespace anglekit {

double tolerance_for(double sigma) { return std::max(kSigmaMultiple * sigma, kAbsoluteFloor); }

CheckResult CheckResult::compare(std::string claim, double computed, double expected, double sigma) {
  CheckResult r;
  r.claim = std::move(claim);
  r.computed = computed;
  r.expected = expected;
  r.sigma = sigma;
  r.tolerance = tolerance_for(sigma);
  r.pass = std::isfinite(computed) && std::abs(computed - expected) <= r.tolerance;
  return r;
}

CheckResult CheckResult::exact(std::string claim, double computed, double expected, bool pass) {
  CheckResult r;
  r.claim = std::move(claim);
  r.computed = computed;
  r.expected = expected;
  r.pass = pass;
  return r;
}

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j{{"claim", claim},   {"computed", computed},   {"expected", expected},
                   {"sigma", sigma},   {"tolerance", tolerance}, {"pass", pass}};
  if (sigma > 0) j["deviation_sigma"] = (computed - expected) / sigma;
  if (informational) j["informational"] = true;
  return j;
}

bool CheckReport::pass() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass && !c.informational; }));
}

void CheckReport::merge(const CheckReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) list.push_back(c.to_json());
  return {{"claim", claim}, {"pass", pass()}, {"failures", failures()}, {"checks", list}, {"details", details}};
}

}  // namespace anglekit
