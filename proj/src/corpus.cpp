#include "anglekit/corpus.hpp"

#include "anglekit/arrangement.hpp"
#include "anglekit/fixtures.hpp"

namespace anglekit {

std::vector<std::string> polytope_corpus() {
  return {"square",      "hexagon",     "ngon 7",      "cube 3",           "cube 4",
          "simplex 3",   "simplex 4",   "cross 3",     "cross 4",          "pyramid 3",
          "pyramid 4",   "generic 2 4", "generic 3 3", "generic 3 4",      "generic 3 5",
          "generic 4 5", "rhombic-dodecahedron", "planar-dependency", "triangular-prism", "skew-octahedron"};
}

std::vector<std::string> zonotope_corpus() {
  std::vector<std::string> out;
  for (const auto& name : polytope_corpus())
    if (load_fixture(name).generators) out.push_back(name);
  return out;
}

std::vector<std::pair<std::string, GradedPoset>> product_formula_lattices() {
  std::vector<std::pair<std::string, GradedPoset>> out{{"C_1", GradedPoset::chain(1)}, {"B_3", GradedPoset::boolean(3)}};
  for (const char* name : {"hexagon", "generic 2 4", "generic 2 5", "generic 3 4", "generic 3 5", "generic 3 6",
                           "generic 4 5", "generic 4 6"}) {
    auto f = load_fixture(name);
    if (f.generators) out.emplace_back(name, *flat_lattice(*f.generators).poset);
  }
  GeneratorConfiguration dependent({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}, 3);
  out.emplace_back("three coplanar of four in 3d", *flat_lattice(dependent).poset);
  return out;
}

std::vector<std::pair<std::string, PosetPtr>> first_kind_posets() {
  std::vector<std::pair<std::string, PosetPtr>> out;
  for (const char* name : {"square", "hexagon", "cube 3", "simplex 3", "cross 3", "pyramid 4", "ngon 7", "generic 3 4",
                           "generic 3 5", "generic 4 5", "cube 4"}) {
    auto f = load_fixture(name);
    out.emplace_back(std::string(name) + " faces", std::make_shared<const GradedPoset>(f.polytope.face_lattice()));
    if (f.generators) out.emplace_back(std::string(name) + " flats", flat_lattice(*f.generators).poset);
  }
  return out;
}

}  // namespace anglekit
