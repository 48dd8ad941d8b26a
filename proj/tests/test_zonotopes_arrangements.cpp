#include <doctest.h>

#include "anglekit/arrangement.hpp"
#include "anglekit/combinatorial_checks.hpp"
#include "anglekit/fixtures.hpp"
#include "support.hpp"

using namespace anglekit;
using testing_support::binomial;

namespace {

/// k-faces of a generic zonotope: a k-subset of generators times the regions
/// cut out by the other n - k generic hyperplanes in dimension d - k.
std::uint64_t generic_zonotope_faces(std::uint64_t d, std::uint64_t n, std::uint64_t k) {
  std::uint64_t regions = 0;
  for (std::uint64_t i = 0; i + k + 1 <= d; ++i) regions += binomial(n - k - 1, i);
  return binomial(n, k) * 2 * regions;
}

}  // namespace

TEST_CASE("covectors of the coordinate arrangement") {
  GeneratorConfiguration cfg({{1, 0}, {0, 1}}, 2);
  auto cv = covectors(cfg);
  CHECK(cv.size() == 9);
  for (const auto& c : cv) CHECK(sign_vector(cfg, c.witness) == c.signs);
}

TEST_CASE("generic zonotope f-vectors match the counting formula") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = d; n <= d + 2; ++n) {
      auto cfg = generic_configuration(d, n, 5 + n);
      REQUIRE(is_generic(cfg));
      auto f = zonotope(cfg).f_vector();
      for (std::size_t k = 0; k < d; ++k)
        CHECK_MESSAGE(f[k] == generic_zonotope_faces(d, n, k), "d=" << d << " n=" << n << " k=" << k);
    }
}

TEST_CASE("Whitney numbers of generic configurations") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = d; n <= d + 2; ++n) {
      auto lat = flat_lattice(generic_configuration(d, n, 3));
      auto w = whitney(lat.poset);
      Rational total = 0;
      for (std::size_t k = 0; k < d; ++k) {
        CHECK(w.second[k] == Rational(static_cast<long>(binomial(n, k))));
        CHECK(w.first[k] == Rational((k % 2 ? -1 : 1) * static_cast<long>(binomial(n, k))));
      }
      CHECK(w.second[d] == 1);
      for (const auto& x : w.first) total += x;
      CHECK(total == 0);
    }
}

TEST_CASE("a dependent planar configuration") {
  GeneratorConfiguration cfg({{1, 0}, {0, 1}, {1, 1}}, 2);
  auto lat = flat_lattice(cfg);
  auto w = whitney(lat.poset);
  CHECK(w.second == std::vector<Rational>{1, 3, 1});
  CHECK(w.first == std::vector<Rational>{1, -3, 2});
  CHECK(zonotope(cfg).f_vector() == std::vector<std::size_t>{6, 6, 1});
}

TEST_CASE("parallel generators share a flat") {
  GeneratorConfiguration cfg({{1, 0}, {2, 0}, {0, 1}}, 2);
  auto lat = flat_lattice(cfg);
  CHECK(whitney(lat.poset).second == std::vector<Rational>{1, 2, 1});
  CHECK(zonotope(cfg).f_vector() == std::vector<std::size_t>{4, 4, 1});
}

TEST_CASE("arrangement orientation gives an isomorphic lattice") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    std::mt19937_64 rng(seed);
    auto cfg = random_configuration(rng, 3);
    auto a = flat_lattice(cfg, FlatOrientation::inclusion);
    auto b = flat_lattice(cfg, FlatOrientation::arrangement);
    CHECK(a.poset->is_isomorphic(*b.poset));
  }
}

TEST_CASE("cocharacteristic polynomials") {
  CHECK(generic_cocharacteristic(2, 0) == std::vector<Integer>{1, 2, 1});
  CHECK(cocharacteristic(flat_lattice(generic_configuration(2, 2, 0)).poset) == std::vector<Integer>{1, 2, 1});
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t j = 0; j <= 3; ++j)
      CHECK(cocharacteristic(flat_lattice(generic_configuration(d, d + j, 9)).poset) == generic_cocharacteristic(d, j));
}

TEST_CASE("characteristic polynomial vanishes at one") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto chi = characteristic(flat_lattice(random_configuration(rng, 4)).poset);
    Integer total = 0;
    for (const auto& c : chi) total += c;
    CHECK(total == 0);
  }
}

TEST_CASE("belt polytopes") {
  CHECK(is_belt_polytope(cube(3)));
  CHECK(is_belt_polytope(load_fixture("generic 3 5").polytope));
  CHECK(is_belt_polytope(load_fixture("rhombic-dodecahedron").polytope));
  CHECK_FALSE(is_belt_polytope(simplex(3)));
  CHECK_FALSE(is_belt_polytope(load_fixture("triangular-prism").polytope));
}

TEST_CASE("face-to-flat map of the cube") {
  auto c = cube(3);
  auto flats = polytope_flats(c);
  CHECK(flats.flats.size() == 8);
  auto faces = std::make_shared<const GradedPoset>(c.face_lattice());
  auto flats0 = std::make_shared<const GradedPoset>(flats.poset->with_new_bottom());
  auto phi = face_to_flat_map(c, flats, faces, flats0);
  CHECK_NOTHROW(phi.validate());
  CHECK(phi.is_rank_preserving());
}

TEST_CASE("vertex counts in a direction") {
  auto c = load_fixture("cube 3");
  CHECK(tangent_cone_vertex_count(c.polytope, {3, -5, 7}) == 1);
  auto z = zonotope(generic_configuration(2, 4, 0));
  auto w = whitney(flat_lattice(generic_configuration(2, 4, 0)).poset);
  CHECK(Rational(static_cast<long>(tangent_cone_vertex_count(z, {17, -3}))) == w.first[2]);
}

TEST_CASE("uniqueness matrices for small dimensions") {
  for (std::size_t d = 1; d <= 4; ++d) {
    auto m = uniqueness_matrices(d);
    CHECK(m.exterior == m.binomial);
    CHECK(m.exterior_determinant == 1);
    CHECK(m.pascal_determinant == 1);
    CHECK(m.cocharacteristic_rank == d);
    CHECK(testing_support::leibniz_determinant(m.pascal) == 1);
  }
  CHECK(greene_zaslavsky_report(5, 4, 3, 1).pass());
}
