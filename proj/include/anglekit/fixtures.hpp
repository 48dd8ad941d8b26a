#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "anglekit/arrangement.hpp"
#include "anglekit/polytope.hpp"

namespace anglekit {

Polytope cube(std::size_t d);      // [0,1]^d
Polytope simplex(std::size_t d);   // conv(0, e_1, ..., e_d)
Polytope cross_polytope(std::size_t d);
Polytope pyramid(std::size_t d);   // over [0,1]^{d-1} with apex (1/2, ..., 1/2, 1)
/// n points on the unit circle at rational parameters, in convex position.
Polytope rational_ngon(std::size_t n);

/// A named polytope together with its generators when it is a zonotope.
struct Fixture {
  std::string name;
  Polytope polytope;
  std::optional<GeneratorConfiguration> generators;
};

/// Names: "cube d", "simplex d", "cross d", "pyramid d", "ngon n", "square",
/// "hexagon", "generic d n [seed]". A JSON file
/// <name>.json in the fixture directory takes precedence.
Fixture load_fixture(const std::string& name);
/// $ANGLEKIT_FIXTURES if set, otherwise the bundled fixture directory (may be empty).
std::string fixture_directory();

RationalVector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const RationalVector& v);
/// {"vertices": [[...], ...]} or {"generators": [[...]], "dim": d}.
Fixture fixture_from_json(const std::string& name, const nlohmann::json& j);
nlohmann::json polytope_to_json(const Polytope& p);
Cone cone_from_json(const nlohmann::json& j);
nlohmann::json cone_to_json(const Cone& c);

}  // namespace anglekit
