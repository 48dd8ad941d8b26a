#include <doctest.h>

#include <cmath>
#include <set>

#include "anglekit/angle_vectors.hpp"
#include "anglekit/fixtures.hpp"
#include "support.hpp"

using namespace anglekit;

namespace {

bool within(const Estimate& e, double expected) {
  return std::abs(e.value - expected) <= tolerance_for(e.std_error);
}

SamplingConfig small_budget(std::uint64_t seed = 0) { return SamplingConfig{200000, seed, 1}; }

/// Inverse stereographic images of distinct integer points lie on the unit sphere.
Polytope random_polytope(std::mt19937_64& rng) {
  std::set<std::pair<long, long>> seen;
  RationalMatrix pts;
  while (pts.size() < 7) {
    long u = testing_support::uniform_int(rng, -3, 3), v = testing_support::uniform_int(rng, -3, 3);
    if (!seen.insert({u, v}).second) continue;
    Rational den = u * u + v * v + 1;
    pts.push_back({Rational(2 * u) / den, Rational(2 * v) / den, Rational(u * u + v * v - 1) / den});
  }
  return Polytope(pts);
}

}  // namespace

TEST_CASE("square angles are exact") {
  AngleTable t(load_fixture("square").polytope, ConeAngleSpec::standard());
  t.run(small_budget());
  auto interior = angle_vector(t, Side::interior);
  CHECK(interior.entries[0].exact);
  CHECK(interior.entries[0].value == doctest::Approx(1.0));
  CHECK(interior.entries[1].value == doctest::Approx(2.0));
  auto exterior = flag_angle_vector(t, Side::exterior);
  CHECK(exterior.entries.at(0).value == 1.0);
  CHECK(exterior.entries.at(rank_set({0})).value == doctest::Approx(1.0));
  CHECK(exterior.entries.at(rank_set({1})).value == doctest::Approx(2.0));
  CHECK(exterior.entries.at(rank_set({0, 1})).value == doctest::Approx(2.0));
}

TEST_CASE("cube and generic zonotope angle vectors") {
  AngleTable cube3(cube(3), ConeAngleSpec::standard());
  cube3.run(small_budget(1));
  auto v = angle_vector(cube3, Side::interior);
  CHECK(within(v.entries[0], 1.0));
  CHECK(within(v.entries[1], 3.0));
  CHECK(within(v.entries[2], 3.0));

  AngleTable gen(load_fixture("generic 3 4").polytope, ConeAngleSpec::standard());
  gen.run(small_budget(2));
  auto gi = angle_vector(gen, Side::interior);
  auto ge = angle_vector(gen, Side::exterior);
  CHECK(within(gi.entries[0], 3.0));
  CHECK(within(gi.entries[1], 8.0));
  CHECK(within(gi.entries[2], 6.0));
  CHECK(within(ge.entries[0], 1.0));
  CHECK(within(ge.entries[1], 4.0));
  CHECK(within(ge.entries[2], 6.0));
}

TEST_CASE("singleton flag entries equal the angle vector") {
  AngleTable t(load_fixture("pyramid 3").polytope, ConeAngleSpec::builtin("body", 3));
  t.run(small_budget(3));
  for (Side side : {Side::interior, Side::exterior}) {
    auto v = angle_vector(t, side);
    auto f = flag_angle_vector(t, side);
    for (std::size_t k = 0; k < 3; ++k) CHECK(f.entries.at(rank_set({k})).value == v.entries[k].value);
  }
}

TEST_CASE("relations hold on random polytopes") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 4; ++trial) {
    AngleTable t(random_polytope(rng), ConeAngleSpec::standard());
    t.run(small_budget(static_cast<std::uint64_t>(trial)));
    CHECK(check_gram(t).pass());
    CHECK(check_exterior_normalization(t).pass());
    CHECK(check_flag_relations(t).pass());
  }
}

TEST_CASE("spherical intrinsic volumes sum to the vertex count") {
  AngleTable t(load_fixture("triangular-prism").polytope, ConeAngleSpec::standard());
  t.run(small_budget(5));
  auto v = spherical_intrinsic_volumes(t);
  REQUIRE(v.size() == 4);
  double total = 0.0, spread = 0.0;
  for (const auto& e : v) {
    total += e.value;
    spread += e.std_error;
  }
  CHECK(std::abs(total - 6.0) <= tolerance_for(spread));
}

TEST_CASE("zonotope expectations for the cube") {
  auto fixture = load_fixture("cube 3");
  REQUIRE(fixture.generators.has_value());
  auto e = zonotope_expectations(flat_lattice(*fixture.generators), 3);
  CHECK(e.intrinsic == std::vector<Rational>{1, 3, 3, 1});
  CHECK(e.exterior.at(rank_set({1})) == 3);
  CHECK(e.exterior.at(rank_set({0, 1})) == 3);
  CHECK(e.interior.at(rank_set({0})) == 1);
  CHECK(e.interior.at(rank_set({2})) == 3);
}

TEST_CASE("zonotope checks pass on a generic zonotope") {
  auto fixture = load_fixture("generic 3 5");
  auto e = zonotope_expectations(flat_lattice(*fixture.generators), 2);
  AngleTable t(fixture.polytope, ConeAngleSpec::standard());
  t.run(small_budget(6));
  CHECK(check_zonotope_whitney(t, e, 2).pass());
  CHECK(check_intrinsic_volumes(t, e).pass());
}

TEST_CASE("tables are reproducible across worker counts") {
  auto p = load_fixture("cross 3").polytope;
  AngleTable a(p, ConeAngleSpec::standard()), b(p, ConeAngleSpec::standard());
  a.run(SamplingConfig{100000, 4, 1});
  b.run(SamplingConfig{100000, 4, 2});
  for (Side side : {Side::interior, Side::exterior}) {
    auto fa = flag_angle_vector(a, side), fb = flag_angle_vector(b, side);
    for (const auto& [s, est] : fa.entries) CHECK(est.value == fb.entries.at(s).value);
  }
}

TEST_CASE("linear forms accumulate with scale") {
  LinearForm f{1.0, {1.0, 0.0}}, g{2.0, {0.0, 3.0}};
  f.add(g, -2.0);
  CHECK(f.value == -3.0);
  CHECK(f.gradient == std::vector<double>{1.0, -6.0});
}

TEST_CASE("tables require a run before reading") {
  AngleTable t(cube(2), ConeAngleSpec::standard());
  CHECK_THROWS(angle_vector(t, Side::interior));
}
