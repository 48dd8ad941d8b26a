#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "anglekit/abindex.hpp"
#include "anglekit/angle_vectors.hpp"
#include "anglekit/combinatorial_checks.hpp"
#include "anglekit/cone_group.hpp"
#include "anglekit/corpus.hpp"
#include "anglekit/fixtures.hpp"
#include "anglekit/manifest.hpp"

using namespace anglekit;
using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

constexpr std::size_t kMaxSampledDim = 4;
constexpr std::size_t kMaxExactDim = 5;

const std::vector<std::string> kCommands = {"gram",          "angles",        "flag-angles", "zonotope-whitney",
                                            "independence",  "intrinsic",     "brianchon-gram", "gz-count",
                                            "reciprocity",   "abindex-span",  "uniqueness-rank"};

bool needs_polytope(const std::string& cmd) {
  return cmd == "gram" || cmd == "angles" || cmd == "flag-angles" || cmd == "zonotope-whitney" ||
         cmd == "independence" || cmd == "intrinsic" || cmd == "brianchon-gram";
}

bool samples_angles(const std::string& cmd) { return needs_polytope(cmd) && cmd != "brianchon-gram"; }

/// "cube" alone means "cube <dim>"; other names pass through.
std::string resolve_fixture_name(const std::string& name, std::size_t dim) {
  static const std::vector<std::string> families = {"cube", "simplex", "cross", "pyramid"};
  if (std::find(families.begin(), families.end(), name) != families.end())
    return name + " " + std::to_string(dim == 0 ? 3 : dim);
  return name;
}

/// Dimension named by a built-in family ("cube 6" -> 6), checked before anything is built.
std::optional<std::size_t> declared_dimension(const std::string& name) {
  std::istringstream words(name);
  std::string head;
  long long d = 0;
  words >> head;
  if (head == "square" || head == "hexagon" || head == "ngon") return 2;
  if ((head == "cube" || head == "simplex" || head == "cross" || head == "pyramid" || head == "generic") &&
      (words >> d) && d >= 0)
    return static_cast<std::size_t>(d);
  return std::nullopt;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

json resolve_angle(const std::string& arg, std::size_t dim) {
  if (arg == "standard" || arg == "body" || arg == "point_limit") return ConeAngleSpec::builtin(arg, dim).to_json();
  if (!std::filesystem::exists(arg)) throw UsageError("unknown angle spec: " + arg);
  auto j = read_json_file(arg);
  try {
    return ConeAngleSpec::from_json(j).to_json();
  } catch (const std::exception& e) {
    throw UsageError("invalid angle spec " + arg + ": " + e.what());
  }
}

Fixture fixture_from_config(const json& config) {
  try {
    if (!config.at("polytope").is_null()) return fixture_from_json("polytope", config.at("polytope"));
    return load_fixture(config.at("fixture").get<std::string>());
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

json estimate_json(const Estimate& e) { return {{"value", e.value}, {"std_error", e.std_error}}; }

std::string set_label(RankSet s) {
  std::string out = "{";
  for (auto i : ranks_of(s)) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

json vector_json(const AngleVector& v) {
  json entries = json::array();
  for (const auto& e : v.entries) entries.push_back(estimate_json(e));
  return {{"side", to_string(v.side)}, {"spec", v.spec}, {"entries", entries}};
}

json flag_json(const FlagAngleVector& v) {
  json entries = json::object();
  for (const auto& [s, e] : v.entries) entries[set_label(s)] = estimate_json(e);
  return {{"side", to_string(v.side)}, {"spec", v.spec}, {"entries", entries}};
}

SamplingConfig sampling_from(const json& config) {
  return SamplingConfig{config.at("samples").get<std::uint64_t>(), config.at("seed").get<std::uint64_t>(),
                        config.at("workers").get<unsigned>()};
}

AngleTable sampled_table(const Fixture& f, const json& spec, const json& config) {
  AngleTable t(f.polytope, ConeAngleSpec::from_json(spec));
  t.run(sampling_from(config));
  return t;
}

void check_dimension(const Fixture& f, std::size_t bound, const std::string& what) {
  if (f.polytope.ambient_dim() > bound)
    throw UsageError(what + " supports dimension <= " + std::to_string(bound) + ", got " +
                     std::to_string(f.polytope.ambient_dim()));
  if (f.polytope.dim() != static_cast<int>(f.polytope.ambient_dim()))
    throw UsageError("the polytope must be full-dimensional");
}

/// Runs a command from its configuration alone.
RunManifest run_command(const std::string& cmd, const json& config) {
  RunManifest m;
  m.command = cmd;
  m.config = config;
  m.started = utc_timestamp();
  const auto& angles = config.at("angles");

  std::optional<Fixture> fixture;
  if (needs_polytope(cmd)) {
    fixture = fixture_from_config(config);
    check_dimension(*fixture, samples_angles(cmd) ? kMaxSampledDim : kMaxExactDim, cmd);
    m.data["polytope"] = polytope_to_json(fixture->polytope);
    auto fv = fixture->polytope.f_vector();
    m.data["f_vector"] = std::vector<std::size_t>(fv.begin() + 1, fv.end() - 1);
  }

  if (cmd == "gram") {
    auto t = sampled_table(*fixture, angles.at(0), config);
    m.reports.push_back(check_gram(t));
    m.data["interior"] = vector_json(angle_vector(t, Side::interior));
  } else if (cmd == "angles") {
    auto t = sampled_table(*fixture, angles.at(0), config);
    json table = json::array();
    for (Side side : {Side::interior, Side::exterior}) {
      auto v = angle_vector(t, side);
      m.data[to_string(side)] = vector_json(v);
      for (std::size_t i = 0; i < v.entries.size(); ++i)
        table.push_back({to_string(side), std::to_string(i), v.entries[i].value, v.entries[i].std_error});
    }
    m.data["table"] = {{"header", {"side", "index", "value", "std_error"}}, {"rows", table}};
    m.reports.push_back(check_exterior_normalization(t));
    m.reports.push_back(check_gram(t));
  } else if (cmd == "flag-angles") {
    auto t = sampled_table(*fixture, angles.at(0), config);
    json table = json::array();
    for (Side side : {Side::interior, Side::exterior}) {
      auto v = flag_angle_vector(t, side);
      m.data[to_string(side)] = flag_json(v);
      for (const auto& [s, e] : v.entries) table.push_back({to_string(side), set_label(s), e.value, e.std_error});
    }
    m.data["table"] = {{"header", {"side", "S", "value", "std_error"}}, {"rows", table}};
    m.reports.push_back(check_flag_relations(t));
  } else if (cmd == "zonotope-whitney" || cmd == "intrinsic") {
    if (cmd == "zonotope-whitney" && !fixture->generators)
      throw UsageError("zonotope-whitney needs a zonotope fixture (generators)");
    auto t = sampled_table(*fixture, angles.at(0), config);
    std::optional<ZonotopeExpectations> expected;
    if (fixture->generators) {
      auto max_flag = config.at("max_flag").get<std::size_t>();
      expected = zonotope_expectations(flat_lattice(*fixture->generators), max_flag == 0 ? t.dim() : max_flag);
    }
    if (cmd == "zonotope-whitney") {
      auto max_flag = config.at("max_flag").get<std::size_t>();
      m.reports.push_back(check_zonotope_whitney(t, *expected, max_flag == 0 ? t.dim() : max_flag));
      m.data["interior"] = vector_json(angle_vector(t, Side::interior));
      m.data["exterior"] = vector_json(angle_vector(t, Side::exterior));
    } else {
      auto v = spherical_intrinsic_volumes(t);
      json table = json::array(), entries = json::array();
      for (std::size_t k = 0; k < v.size(); ++k) {
        entries.push_back(estimate_json(v[k]));
        table.push_back({std::to_string(k), v[k].value, v[k].std_error});
      }
      m.data["intrinsic"] = entries;
      m.data["table"] = {{"header", {"k", "value", "std_error"}}, {"rows", table}};
      if (expected) m.reports.push_back(check_intrinsic_volumes(t, *expected));
      else m.data["note"] = "not a zonotope fixture: values reported without a reference";
    }
  } else if (cmd == "independence") {
    if (!fixture->generators) throw UsageError("independence needs a zonotope fixture (generators)");
    std::vector<AngleTable> tables;
    tables.reserve(angles.size());
    for (const auto& spec : angles) tables.push_back(sampled_table(*fixture, spec, config));
    std::vector<const AngleTable*> ptrs;
    for (const auto& t : tables) ptrs.push_back(&t);
    m.reports.push_back(check_angle_independence(ptrs));
    json per_spec = json::array();
    for (const auto& t : tables)
      per_spec.push_back({{"interior", vector_json(angle_vector(t, Side::interior))},
                          {"exterior", vector_json(angle_vector(t, Side::exterior))}});
    m.data["vectors"] = per_spec;
  } else if (cmd == "brianchon-gram") {
    const auto trials = config.at("trials").get<std::size_t>();
    const auto seed = config.at("seed").get<std::uint64_t>();
    CheckReport r{"cone indicator identities hold almost everywhere", {}, {}};
    auto record = [&](const std::string& name, const std::pair<ConeCombination, ConeCombination>& pr) {
      auto v = ae_equal(pr.first, pr.second, trials, seed);
      std::string claim = name + ": " + std::to_string(pr.first.terms().size()) + " terms, " +
                          std::to_string(v.trials) + " points, " + std::to_string(v.rejected) + " rejected";
      r.add(CheckResult::exact(claim, static_cast<double>(v.lhs), static_cast<double>(v.rhs), v.equal));
      if (v.witness) r.details[name + " witness"] = vector_to_json(*v.witness);
    };
    record("Brianchon-Gram for the homogenization", brianchon_gram(homogenize(fixture->polytope)));
    record("Gram combination of tangent cones", gram_combination(fixture->polytope));
    record("outer cones of the vertices partition space", vertex_partition(fixture->polytope));
    m.reports.push_back(r);
  } else if (cmd == "gz-count") {
    const auto dim = config.at("dim").get<std::size_t>();
    m.reports.push_back(greene_zaslavsky_report(config.at("arrangements").get<std::size_t>(),
                                                config.at("directions").get<std::size_t>(), dim == 0 ? 4 : dim,
                                                config.at("seed").get<std::uint64_t>()));
  } else if (cmd == "reciprocity") {
    const auto conv = config.at("convention").get<std::string>();
    const auto n = config.at("functions").get<std::size_t>();
    const auto rank = config.at("max_rank").get<std::size_t>();
    const auto seed = config.at("seed").get<std::uint64_t>();
    if (conv == "open" || conv == "both") m.reports.push_back(reciprocity_report(n, rank, seed, ChainConvention::open));
    if (conv == "closed" || conv == "both")
      m.reports.push_back(reciprocity_report(n, rank, seed, ChainConvention::closed));
    m.reports.push_back(first_kind_report(first_kind_posets()));
  } else if (cmd == "abindex-span") {
    const auto dim = config.at("dim").get<std::size_t>();
    for (std::size_t d = 1; d <= (dim == 0 ? kMaxExactDim : dim); ++d) m.reports.push_back(spanning_report(d));
    m.reports.push_back(product_formula_report(product_formula_lattices()));
  } else if (cmd == "uniqueness-rank") {
    const auto dim = config.at("dim").get<std::size_t>();
    const std::size_t d = dim == 0 ? 4 : dim;
    m.reports.push_back(uniqueness_report(d, config.at("seed").get<std::uint64_t>()));
    m.reports.push_back(cocharacteristic_report(d, 4, config.at("seed").get<std::uint64_t>()));
  } else {
    throw UsageError("unknown command " + cmd);
  }
  m.finished = utc_timestamp();
  return m;
}

std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string to_csv(const RunManifest& m) {
  std::ostringstream out;
  auto write_row = [&](const json& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  };
  if (m.data.contains("table")) {
    write_row(m.data["table"]["header"]);
    for (const auto& row : m.data["table"]["rows"]) write_row(row);
    return out.str();
  }
  write_row({"report", "claim", "computed", "expected", "sigma", "tolerance", "pass"});
  for (const auto& r : m.reports)
    for (const auto& c : r.checks) write_row({r.claim, c.claim, c.computed, c.expected, c.sigma, c.tolerance, c.pass});
  return out.str();
}

void print_summary(const RunManifest& m, std::ostream& out) {
  if (m.data.contains("note")) out << m.data["note"].get<std::string>() << "\n";
  for (const auto& r : m.reports) {
    out << (r.pass() ? "PASS " : "FAIL ") << r.claim << " (" << r.checks.size() - r.failures() << "/"
        << r.checks.size() << ")\n";
    for (const auto& c : r.checks)
      if (!c.pass && !c.informational)
        out << "  failed: " << c.claim << "  computed " << c.computed << " expected " << c.expected << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cone angles, angle vectors and flag-Whitney numbers of polytopes"};
  app.require_subcommand(1);

  std::string fixture, polytope_path, format = "json", out_dir = "reports", convention = "both", manifest_path;
  std::vector<std::string> angle_args;
  std::uint64_t samples = 1000000, seed = 0;
  unsigned workers = 1;
  std::size_t dim = 0, trials = 1000, arrangements = 20, directions = 10, functions = 100, max_rank = 4,
              max_flag = 0;

  const std::map<std::string, std::string> descriptions{
      {"gram", "alternating sum of interior angles"},
      {"angles", "interior and exterior angle vectors"},
      {"flag-angles", "flag-angle vectors and their linear relations"},
      {"zonotope-whitney", "zonotope flag angles against flag Whitney numbers"},
      {"independence", "angle vectors of a zonotope under several angle specs"},
      {"intrinsic", "spherical intrinsic volumes"},
      {"brianchon-gram", "cone indicator identities at exact random points"},
      {"gz-count", "vertex counts in generic directions against the Moebius function"},
      {"reciprocity", "chain-sum reciprocity for unipotent incidence functions"},
      {"abindex-span", "rank of ab-indices of pyramid/prism posets and the product formula"},
      {"uniqueness-rank", "determinants of Whitney and cocharacteristic matrices"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    subs[name] = sub;
    sub->add_option("--format", format, "json or csv (JSON is always written)")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_dir, "directory for report files");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--dim", dim, "dimension (family fixtures, or the bound for exact suites)");
    if (needs_polytope(name)) {
      sub->add_option("--fixture", fixture, "fixture name, e.g. \"cube 3\" or \"generic 3 5 1\"");
      sub->add_option("--polytope", polytope_path, "JSON file with vertices or generators");
    }
    if (samples_angles(name)) {
      sub->add_option("--angle", angle_args, "builtin name (standard, body, point_limit) or spec JSON path");
      sub->add_option("--samples", samples, "Monte Carlo budget")->check(CLI::PositiveNumber);
      sub->add_option("--workers", workers, "sampling threads")->check(CLI::Range(1u, 256u));
    }
  }
  subs["zonotope-whitney"]->add_option("--max-flag", max_flag, "largest |S| compared (0 = all)");
  subs["brianchon-gram"]->add_option("--trials", trials, "random points per identity")->check(CLI::PositiveNumber);
  subs["gz-count"]->add_option("--arrangements", arrangements, "random arrangements");
  subs["gz-count"]->add_option("--directions", directions, "generic directions per arrangement");
  subs["reciprocity"]->add_option("--functions", functions, "random unipotent functions");
  subs["reciprocity"]->add_option("--max-rank", max_rank, "largest poset rank")->check(CLI::Range(2, 6));
  subs["reciprocity"]->add_option("--convention", convention, "open, closed or both")
      ->check(CLI::IsMember({"open", "closed", "both"}));
  auto* replay = app.add_subcommand("replay", "rerun the last manifest in a report file and compare results");
  replay->add_option("manifest", manifest_path, "report file (.jsonl)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (replay->parsed()) {
      std::ifstream in(manifest_path);
      if (!in) throw UsageError("cannot open " + manifest_path);
      std::string line, last;
      while (std::getline(in, line))
        if (!line.empty()) last = line;
      if (last.empty()) throw UsageError("no manifest in " + manifest_path);
      json recorded;
      try {
        recorded = json::parse(last);
      } catch (const json::exception& e) {
        throw UsageError(std::string("malformed manifest: ") + e.what());
      }
      auto original = RunManifest::from_json(recorded);
      auto again = run_command(original.command, original.config);
      const bool same = again.results() == recorded.at("results");
      std::cout << (same ? "replay identical" : "replay differs") << ": " << original.command << " "
                << original.config_hash() << "\n";
      return same ? 0 : 1;
    }

    std::string cmd;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) cmd = name;

    json config{{"fixture", nullptr}, {"polytope", nullptr}, {"angles", json::array()}, {"samples", samples},
                {"seed", seed},       {"workers", workers},  {"dim", dim},              {"trials", trials},
                {"arrangements", arrangements}, {"directions", directions}, {"functions", functions},
                {"max_rank", max_rank}, {"max_flag", max_flag}, {"convention", convention}};
    if (dim > kMaxExactDim) throw UsageError("--dim must be at most " + std::to_string(kMaxExactDim));
    if (cmd == "gz-count" && dim > kMaxSampledDim) throw UsageError("gz-count supports --dim <= 4");
    if (needs_polytope(cmd)) {
      if (fixture.empty() == polytope_path.empty()) throw UsageError("give exactly one of --fixture and --polytope");
      if (!polytope_path.empty()) config["polytope"] = read_json_file(polytope_path);
      else config["fixture"] = resolve_fixture_name(fixture, dim);
      const std::size_t bound = samples_angles(cmd) ? kMaxSampledDim : kMaxExactDim;
      if (config["fixture"].is_string())
        if (auto d = declared_dimension(config["fixture"].get<std::string>()); d && *d > bound)
          throw UsageError(cmd + " supports dimension <= " + std::to_string(bound));
    }
    if (samples_angles(cmd)) {
      std::size_t d = fixture_from_config(config).polytope.ambient_dim();
      if (angle_args.empty()) {
        if (cmd == "independence") angle_args = {"standard", "body", "point_limit"};
        else angle_args = {"standard"};
      }
      if (cmd == "independence" && angle_args.size() < 2) throw UsageError("independence needs at least two --angle specs");
      for (const auto& a : angle_args) config["angles"].push_back(resolve_angle(a, d));
    }

    auto m = run_command(cmd, config);
    auto path = m.append_to(out_dir);
    if (format == "csv") {
      auto csv_path = std::filesystem::path(out_dir) / (cmd + "-" + m.config_hash() + ".csv");
      std::ofstream(csv_path) << to_csv(m);
      std::cout << "csv: " << csv_path.string() << "\n";
    }
    print_summary(m, std::cout);
    std::cout << "report: " << path << "\n";
    return m.pass() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
