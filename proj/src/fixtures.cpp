#include "anglekit/fixtures.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace anglekit {

Polytope cube(std::size_t d) {
  RationalMatrix vs;
  for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
    RationalVector v = zero_vector(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
    vs.push_back(v);
  }
  return Polytope(vs);
}

Polytope simplex(std::size_t d) {
  RationalMatrix vs{zero_vector(d)};
  for (std::size_t i = 0; i < d; ++i) vs.push_back(unit_vector(d, i));
  return Polytope(vs);
}

Polytope cross_polytope(std::size_t d) {
  RationalMatrix vs;
  for (std::size_t i = 0; i < d; ++i) {
    vs.push_back(unit_vector(d, i));
    vs.push_back(-unit_vector(d, i));
  }
  return Polytope(vs);
}

Polytope pyramid(std::size_t d) {
  if (d < 2) throw Error("pyramid needs d >= 2");
  RationalMatrix vs;
  for (std::size_t mask = 0; mask < (std::size_t(1) << (d - 1)); ++mask) {
    RationalVector v = zero_vector(d);
    for (std::size_t i = 0; i + 1 < d; ++i) v[i] = (mask >> i) & 1;
    vs.push_back(v);
  }
  RationalVector apex(d, Rational(1, 2));
  apex[d - 1] = 1;
  vs.push_back(apex);
  return Polytope(vs);
}

Polytope rational_ngon(std::size_t n) {
  if (n < 3) throw Error("ngon needs n >= 3");
  RationalMatrix vs;
  for (std::size_t k = 0; k < n; ++k) {
    double half = std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n);
    Rational t(static_cast<long>(std::llround(std::tan(half) * 65536.0)), 65536);
    t.canonicalize();
    Rational den = 1 + t * t;
    vs.push_back({(1 - t * t) / den, 2 * t / den});
  }
  return Polytope(vs);
}

std::string fixture_directory() {
  if (const char* env = std::getenv("ANGLEKIT_FIXTURES")) return env;
#ifdef ANGLEKIT_FIXTURE_DIR
  return ANGLEKIT_FIXTURE_DIR;
#else
  return {};
#endif
}

RationalVector vector_from_json(const nlohmann::json& j) {
  RationalVector v;
  for (const auto& x : j) {
    if (x.is_string()) v.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) v.push_back(Rational(x.get<long>()));
    else throw Error("coordinates must be integers or \"p/q\" strings");
  }
  return v;
}

nlohmann::json vector_to_json(const RationalVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) j.push_back(x.get_num().get_si());
    else j.push_back(x.get_str());
  }
  return j;
}

Fixture fixture_from_json(const std::string& name, const nlohmann::json& j) {
  if (j.contains("generators")) {
    RationalMatrix gens;
    for (const auto& g : j.at("generators")) gens.push_back(vector_from_json(g));
    if (gens.empty()) throw Error("fixture has no generators");
    std::size_t d = j.contains("dim") ? j.at("dim").get<std::size_t>() : gens[0].size();
    GeneratorConfiguration cfg(gens, d);
    return Fixture{name, zonotope(cfg), cfg};
  }
  RationalMatrix vs;
  for (const auto& v : j.at("vertices")) vs.push_back(vector_from_json(v));
  return Fixture{name, Polytope(vs), std::nullopt};
}

nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : p.vertices()) vs.push_back(vector_to_json(v));
  return {{"vertices", vs}};
}

Cone cone_from_json(const nlohmann::json& j) {
  RationalMatrix gens;
  for (const auto& g : j.at("generators")) gens.push_back(vector_from_json(g));
  std::size_t d = j.contains("dim") ? j.at("dim").get<std::size_t>() : (gens.empty() ? 0 : gens[0].size());
  return Cone(gens, d);
}

nlohmann::json cone_to_json(const Cone& c) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : c.generators()) gens.push_back(vector_to_json(g));
  return {{"generators", gens}, {"dim", c.ambient_dim()}};
}

Fixture load_fixture(const std::string& name) {
  const std::string dir = fixture_directory();
  if (!dir.empty()) {
    std::filesystem::path path = std::filesystem::path(dir) / (name + ".json");
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      return fixture_from_json(name, nlohmann::json::parse(in));
    }
  }
  std::istringstream words(name);
  std::string head;
  words >> head;
  std::vector<std::size_t> args;
  for (long long x; words >> x;) {
    if (x < 0) throw Error("fixture arguments must be nonnegative: " + name);
    args.push_back(static_cast<std::size_t>(x));
  }
  auto need = [&](std::size_t k) {
    if (args.size() < k) throw Error("fixture '" + name + "' needs " + std::to_string(k) + " argument(s)");
  };
  auto unit_generators = [](std::size_t d) {
    RationalMatrix gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(unit_vector(d, i));
    return GeneratorConfiguration(gens, d);
  };
  if (head == "square") return Fixture{name, cube(2), unit_generators(2)};
  if (head == "hexagon") {
    auto cfg = generic_configuration(2, 3, 0);
    return Fixture{name, zonotope(cfg), cfg};
  }
  if (head == "cube") {
    need(1);
    return Fixture{name, cube(args[0]), unit_generators(args[0])};
  }
  if (head == "simplex") {
    need(1);
    return Fixture{name, simplex(args[0]), std::nullopt};
  }
  if (head == "cross") {
    need(1);
    return Fixture{name, cross_polytope(args[0]), std::nullopt};
  }
  if (head == "pyramid") {
    need(1);
    return Fixture{name, pyramid(args[0]), std::nullopt};
  }
  if (head == "ngon") {
    need(1);
    return Fixture{name, rational_ngon(args[0]), std::nullopt};
  }
  if (head == "generic") {
    need(2);
    auto cfg = generic_configuration(args[0], args[1], args.size() > 2 ? args[2] : 0);
    return Fixture{name, zonotope(cfg), cfg};
  }
  throw Error("unknown fixture: " + name);
}

}  // namespace anglekit
