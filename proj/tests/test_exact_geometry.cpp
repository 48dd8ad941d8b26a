#include <doctest.h>

#include "anglekit/fixtures.hpp"
#include "anglekit/lp.hpp"
#include "anglekit/polytope.hpp"
#include "anglekit/subspace.hpp"
#include "support.hpp"

using namespace anglekit;
using testing_support::random_matrix;
using testing_support::random_vector;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(parse_rational("12") == 12);
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK_THROWS_AS(parse_rational("x"), std::exception);
}

TEST_CASE("primitive and canonical directions") {
  RationalVector v{Rational(-2, 3), Rational(4, 3), 0};
  CHECK(primitive(v) == RationalVector{-1, 2, 0});
  bool flipped = false;
  CHECK(canonical_direction(v, &flipped) == RationalVector{1, -2, 0});
  CHECK(flipped);
}

TEST_CASE("determinant agrees with the permutation expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto m = random_matrix(rng, n, n, 4);
    CHECK(determinant(m) == testing_support::leibniz_determinant(m));
  }
}

TEST_CASE("rank is transpose invariant and bounded by factor sizes") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto left = random_matrix(rng, 5, 2, 3);
    auto right = random_matrix(rng, 2, 4, 3);
    RationalMatrix product(5, RationalVector(4));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 2; ++k) product[i][j] += left[i][k] * right[k][j];
    RationalMatrix transposed(4, RationalVector(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 4; ++j) transposed[j][i] = product[i][j];
    CHECK(rank(product) <= 2);
    CHECK(rank(product) == rank(transposed));
  }
}

TEST_CASE("nullspace vectors are annihilated and complete") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + trial % 4;
    auto a = random_matrix(rng, rows, 5, 2);
    auto basis = nullspace(a, 5);
    CHECK(basis.size() + rank(a) == 5);
    for (const auto& x : basis)
      for (const auto& row : a) CHECK(dot(row, x) == 0);
    if (!basis.empty()) CHECK(rank(basis) == basis.size());
  }
}

TEST_CASE("nonnegative solutions solve feasible systems") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(rng, 3, 5, 3);
    RationalVector x0(5);
    for (auto& x : x0) x = testing_support::uniform_int(rng, 0, 3);
    RationalVector b(3);
    for (std::size_t i = 0; i < 3; ++i) b[i] = dot(a[i], x0);
    auto x = nonnegative_solution(a, b);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < 3; ++i) CHECK(dot(a[i], *x) == b[i]);
    for (const auto& xi : *x) CHECK(xi >= 0);
  }
  CHECK_FALSE(nonnegative_solution({{1, 1}}, {-1}).has_value());
}

TEST_CASE("sign witnesses realize the requested signs") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    auto vecs = random_matrix(rng, 4, 3, 3);
    auto p = random_vector(rng, 3, 5);
    std::vector<int> signs;
    for (const auto& v : vecs) signs.push_back(sgn(dot(v, p)));
    auto w = sign_witness(vecs, signs);
    REQUIRE(w.has_value());
    for (std::size_t i = 0; i < vecs.size(); ++i) CHECK(sgn(dot(vecs[i], *w)) == signs[i]);
  }
  CHECK_FALSE(sign_witness({{1, 0}, {-1, 0}}, {1, 1}).has_value());
}

TEST_CASE("subspace dimension formula") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    LinearSubspace u(random_matrix(rng, 1 + trial % 3, 4, 2), 4);
    LinearSubspace v(random_matrix(rng, 1 + (trial / 3) % 3, 4, 2), 4);
    CHECK(u.join(v).dim() + u.intersect(v).dim() == u.dim() + v.dim());
    CHECK(u.orthogonal_complement().dim() + u.dim() == 4);
    CHECK(u.join(v).contains(u));
    CHECK(u.contains(u.intersect(v)));
  }
}

TEST_CASE("cone membership agrees with the conic combination oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto gens = random_matrix(rng, 3 + trial % 3, 3, 3);
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const RationalVector& g) { return is_zero(g); }),
               gens.end());
    if (gens.empty()) continue;
    Cone c(gens, 3);
    for (const auto& g : gens) CHECK(c.contains(g));
    for (int k = 0; k < 10; ++k) {
      auto x = random_vector(rng, 3, 4);
      CHECK(c.contains(x) == conic_combination(gens, x).has_value());
    }
  }
}

TEST_CASE("quadrant description and polar") {
  Cone q({{1, 0}, {0, 1}}, 2);
  CHECK(q.description().facets.size() == 2);
  CHECK(q.is_full_dimensional());
  CHECK(q.contains_in_interior({1, 1}));
  CHECK_FALSE(q.contains_in_interior({1, 0}));
  CHECK(q.polar().same_set(Cone({{-1, 0}, {0, -1}}, 2)));
  Cone redundant({{1, 0}, {0, 1}, {1, 1}, {2, 3}}, 2);
  CHECK(redundant.canonical_key() == q.canonical_key());
}

TEST_CASE("double polar returns the cone") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = random_matrix(rng, 4, 3, 2);
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const RationalVector& g) { return is_zero(g); }),
               gens.end());
    if (gens.empty()) continue;
    Cone c(gens, 3);
    CHECK(c.polar().polar().same_set(c));
    CHECK(c.dim() == LinearSubspace(gens, 3).dim());
  }
}

TEST_CASE("f-vectors of standard families") {
  using testing_support::binomial;
  for (std::size_t d = 2; d <= 4; ++d) {
    auto fc = cube(d).f_vector();
    auto fs = simplex(d).f_vector();
    auto fx = cross_polytope(d).f_vector();
    for (std::size_t k = 0; k < d; ++k) {
      CHECK(fc[k] == binomial(d, k) << (d - k));
      CHECK(fs[k] == binomial(d + 1, k + 1));
      CHECK(fx[k] == (binomial(d, k + 1) << (k + 1)));
    }
  }
}

TEST_CASE("Euler relation on the fixture corpus") {
  for (const char* name : {"square", "hexagon", "cube 3", "cube 4", "simplex 4", "cross 3", "pyramid 3", "pyramid 4",
                           "ngon 7", "generic 3 5", "triangular-prism", "skew-octahedron", "rhombic-dodecahedron"}) {
    auto p = load_fixture(name).polytope;
    long euler = 0;
    auto f = p.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) euler += (k % 2 ? -1 : 1) * static_cast<long>(f[k]);
    CHECK_MESSAGE(euler == 1, name);
    CHECK(p.face_lattice().size() == p.faces().size());
  }
}

TEST_CASE("cones at faces of the unit cube") {
  auto c = cube(3);
  auto origin = *c.find_face({0});
  CHECK(c.face(origin).dim == 0);
  auto t = tangent_cone(c, origin);
  CHECK(t.same_set(Cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)));
  CHECK(normal_cone(c, origin).same_set(Cone({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, 3)));
  for (auto f : c.faces_of_dim(2)) {
    auto o = outer_cone(c, f);
    CHECK(o.is_full_dimensional());
    CHECK(o.description().facets.size() == 1);
    CHECK(tangent_cone(c, f).description().facets.size() == 1);
  }
  CHECK(outer_cone(c, c.top()).is_whole_space());
  CHECK(homogenize(c).dim() == 4);
}

TEST_CASE("relative cones inside a face") {
  auto c = cube(3);
  auto facet = c.faces_of_dim(2).front();
  auto edge = c.face(facet).subfaces.front();
  auto inside = tangent_cone(c, edge, facet);
  CHECK(inside.dim() == 3);
  CHECK(inside.description().facets.size() == 1);
  CHECK(c.relative_facets(facet).size() == 4);
}

TEST_CASE("fixtures reject unknown names") {
  CHECK_THROWS_AS(load_fixture("dodecagon prism"), Error);
  CHECK_THROWS(load_fixture("cube 0"));
}
