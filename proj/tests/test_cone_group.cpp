#include <doctest.h>

#include "anglekit/cone_group.hpp"
#include "anglekit/fixtures.hpp"
#include "support.hpp"

using namespace anglekit;

namespace {

ConeCombination random_combination(std::mt19937_64& rng, std::size_t d) {
  ConeCombination f(d);
  const long terms = testing_support::uniform_int(rng, 1, 3);
  for (long t = 0; t < terms; ++t) {
    RationalMatrix gens;
    while (gens.size() < d) {
      auto g = testing_support::random_vector(rng, d, 2);
      if (!is_zero(g)) gens.push_back(g);
    }
    f.add(testing_support::uniform_int(rng, -2, 2), Cone(gens, d));
  }
  return f;
}

const char* const kFixtures[] = {"square", "hexagon", "cube 3", "simplex 3", "cross 3", "pyramid 3",
                                 "generic 3 5", "ngon 7", "triangular-prism", "skew-octahedron"};

}  // namespace

TEST_CASE("evaluation of closed and open terms") {
  Cone quadrant({{1, 0}, {0, 1}}, 2);
  ConeCombination closed(2), open(2);
  closed.add(1, quadrant);
  open.add(1, quadrant, true);
  CHECK(evaluate_at(closed, {1, 0}) == 1);
  CHECK(evaluate_at(open, {1, 0}) == 0);
  CHECK(evaluate_at(open, {1, 1}) == 1);
  CHECK_THROWS_AS(ConeCombination(2).add(1, Cone({{1, 0}}, 2), true), Error);
}

TEST_CASE("quadrant against the plane yields a witness") {
  ConeCombination f(2), g(2);
  f.add(1, Cone({{1, 0}, {0, 1}}, 2));
  g.add(1, Cone::whole_space(2));
  auto v = ae_equal(f, g, 200, 1);
  CHECK_FALSE(v.equal);
  REQUIRE(v.witness.has_value());
  CHECK(evaluate_at(f, *v.witness) != evaluate_at(g, *v.witness));
  CHECK(v.lhs == 0);
  CHECK(v.rhs == 1);
}

TEST_CASE("opposite halfspaces cover space almost everywhere") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = testing_support::random_vector(rng, 3, 3);
    if (is_zero(n)) continue;
    ConeCombination f(3), g(3);
    f.add(1, Cone::halfspace(n)).add(1, Cone::halfspace(-n));
    g.add(1, Cone::whole_space(3));
    CHECK(ae_equal(f, g, 200, static_cast<std::uint64_t>(trial)).equal);
  }
}

TEST_CASE("a.e. equality is reflexive and symmetric") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_combination(rng, 2);
    auto g = random_combination(rng, 2);
    CHECK(ae_equal(f, f, 100, 3).equal);
    auto fg = ae_equal(f, g, 100, 3);
    auto gf = ae_equal(g, f, 100, 3);
    CHECK(fg.equal == gf.equal);
  }
}

TEST_CASE("faces of an orthant") {
  for (std::size_t d = 1; d <= 4; ++d) {
    RationalMatrix gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(unit_vector(d, i));
    auto faces = cone_faces(Cone(gens, d));
    CHECK(faces.size() == (1u << d));
    long euler = 0;
    for (const auto& f : faces) euler += f.dim % 2 ? -1 : 1;
    CHECK(euler == 0);
  }
}

TEST_CASE("Gram, vertex partition and Brianchon-Gram on fixtures") {
  for (const char* name : kFixtures) {
    auto p = load_fixture(name).polytope;
    auto [gl, gr] = gram_combination(p);
    CHECK_MESSAGE(ae_equal(gl, gr, 300, 5).equal, name);
    auto [vl, vr] = vertex_partition(p);
    CHECK_MESSAGE(ae_equal(vl, vr, 300, 6).equal, name);
    for (auto v : p.faces_of_dim(0)) {
      auto [bl, br] = brianchon_gram(tangent_cone(p, v));
      CHECK_MESSAGE(ae_equal(bl, br, 100, 7).equal, name);
      break;
    }
  }
}

TEST_CASE("Brianchon-Gram on random cones") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix gens;
    while (gens.size() < 4) {
      auto g = testing_support::random_vector(rng, 3, 3);
      if (!is_zero(g)) gens.push_back(g);
    }
    Cone c(gens, 3);
    if (!c.is_full_dimensional() || c.is_whole_space()) continue;
    auto [l, r] = brianchon_gram(c);
    CHECK(ae_equal(l, r, 200, static_cast<std::uint64_t>(trial)).equal);
  }
}

TEST_CASE("a sign error in Gram's relation is detected") {
  auto p = cube(3);
  auto [lhs, rhs] = gram_combination(p);
  ConeCombination wrong(3);
  wrong.add(-rhs.terms().front().coefficient, rhs.terms().front().cone);
  CHECK_FALSE(ae_equal(lhs, wrong, 300, 8).equal);
}
