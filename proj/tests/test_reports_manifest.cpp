#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "anglekit/manifest.hpp"

using namespace anglekit;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("anglekit-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(ANGLEKIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::vector<nlohmann::json> read_lines(const fs::path& dir) {
  std::vector<nlohmann::json> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("tolerance floor and sigma multiple") {
  CHECK(tolerance_for(0.0) == kAbsoluteFloor);
  CHECK(tolerance_for(1.0) == 4.0);
  auto near = CheckResult::compare("c", 1.0005, 1.0, 0.0);
  CHECK(near.pass);
  auto far = CheckResult::compare("c", 1.1, 1.0, 0.01);
  CHECK_FALSE(far.pass);
  CHECK(far.to_json().contains("deviation_sigma"));
}

TEST_CASE("informational checks do not decide a report") {
  CheckReport r{"claim", {}, {}};
  r.add(CheckResult::exact("ok", 1, 1, true));
  auto info = CheckResult::exact("info", 0, 1, false);
  info.informational = true;
  r.add(info);
  CHECK(r.pass());
  CHECK(r.failures() == 0);
  r.add(CheckResult::exact("bad", 0, 1, false));
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == 1);
}

TEST_CASE("manifest hash depends only on command and config") {
  RunManifest a{"gram", {{"seed", 1}}, "t0", "t1", {}, {}};
  RunManifest b{"gram", {{"seed", 1}}, "t2", "t3", {}, {}};
  RunManifest c{"gram", {{"seed", 2}}, "t0", "t1", {}, {}};
  CHECK(a.config_hash() == b.config_hash());
  CHECK(a.config_hash() != c.config_hash());
  CHECK(a.config_hash().size() == 16);
  CHECK(a.results() == b.results());
  auto back = RunManifest::from_json(a.to_json());
  CHECK(back.command == "gram");
  CHECK(back.config == a.config);
}

TEST_CASE("manifests append to one file per configuration") {
  auto dir = scratch_dir("append");
  RunManifest m{"angles", {{"seed", 3}}, utc_timestamp(), utc_timestamp(), {}, {}};
  auto p1 = m.append_to(dir.string());
  auto p2 = m.append_to(dir.string());
  CHECK(p1 == p2);
  CHECK(read_lines(dir).size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("command line exit codes") {
  auto dir = scratch_dir("cli");
  const std::string out = " --out " + dir.string();
  CHECK(run_cli("gram --fixture cube --samples 50000" + out) == 0);
  CHECK(run_cli("zonotope-whitney --fixture \"generic 2 4\" --samples 50000" + out) == 0);
  CHECK(run_cli("reciprocity --functions 20 --convention closed" + out) == 0);
  CHECK(run_cli("reciprocity --functions 20 --convention open" + out) == 1);
  CHECK(run_cli("uniqueness-rank --dim 3" + out) == 0);
  CHECK(run_cli("gram --fixture \"no such thing\"" + out) == 2);
  CHECK(run_cli("gram --fixture \"cube 6\"" + out) == 2);
  CHECK(run_cli("frobnicate" + out) == 2);
  fs::remove_all(dir);
}

TEST_CASE("replay reproduces a report") {
  auto dir = scratch_dir("replay");
  REQUIRE(run_cli("angles --fixture \"generic 3 4\" --samples 40000 --seed 5 --workers 2 --out " + dir.string()) == 0);
  fs::path report;
  for (const auto& entry : fs::directory_iterator(dir)) report = entry.path();
  CHECK(run_cli("replay " + report.string()) == 0);
  auto lines = read_lines(dir);
  REQUIRE(lines.size() == 1);
  auto tampered = lines[0];
  tampered["results"]["pass"] = false;
  std::ofstream(report, std::ios::app) << tampered.dump() << "\n";
  CHECK(run_cli("replay " + report.string()) == 1);
  fs::remove_all(dir);
}
