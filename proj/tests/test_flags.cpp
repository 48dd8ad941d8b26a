#include <doctest.h>

#include "anglekit/combinatorial_checks.hpp"
#include "anglekit/fixtures.hpp"
#include "anglekit/flags.hpp"
#include "support.hpp"

using namespace anglekit;

namespace {

PosetPtr share(GradedPoset p) { return std::make_shared<const GradedPoset>(std::move(p)); }

}  // namespace

TEST_CASE("rank sets round trip") {
  for (RankSet s = 0; s < 64; ++s) CHECK(rank_set(ranks_of(s)) == s);
  CHECK(ranks_of(0b1010) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("flag numbers of B_3") {
  auto b3 = share(GradedPoset::boolean(3));
  auto second = flag_whitney_vector(b3, WhitneyKind::second);
  CHECK(second.at(0) == 1);
  CHECK(second.at(rank_set({1})) == 3);
  CHECK(second.at(rank_set({2})) == 3);
  CHECK(second.at(rank_set({1, 2})) == 6);
  CHECK(flag_whitney(b3, WhitneyKind::first, rank_set({1})) == -3);
  CHECK(flag_whitney(b3, WhitneyKind::first, rank_set({2})) == 3);
  CHECK(flag_whitney(b3, WhitneyKind::first, rank_set({1, 2})) == 6);
  CHECK(whitney_numbers(b3, WhitneyKind::first) == std::vector<Rational>{1, -3, 3, -1});
}

TEST_CASE("interior chains of B_2") {
  auto chains = interior_chains(GradedPoset::boolean(2));
  CHECK(chains.size() == 3);
  CHECK(chains.front().empty());
}

TEST_CASE("closed-chain reciprocity on random unipotent functions") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = share(random_graded_poset(rng, 2 + trial % 3));
    auto g = random_unipotent(rng, p);
    CHECK(reciprocity_check(g, ChainConvention::closed).holds);
  }
}

TEST_CASE("open-chain reciprocity fails already on a chain of rank two") {
  auto c2 = share(GradedPoset::chain(2));
  IncidenceFunction<Rational> g = zeta<Rational>(c2);
  g.set(c2->bottom(), c2->elements_of_rank(1).front(), 3);
  auto o = reciprocity_check(g, ChainConvention::open);
  CHECK_FALSE(o.holds);
  CHECK(o.mismatch.empty());
}

TEST_CASE("reciprocal transform is an involution up to sign conventions") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = share(random_graded_poset(rng, 3));
    auto c = chain_coefficients(random_unipotent(rng, p), ChainConvention::closed);
    CHECK(reciprocal_transform(reciprocal_transform(c)) == c);
  }
}

TEST_CASE("first-kind flag numbers from chain counts") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = share(random_graded_poset(rng, 2 + trial % 3));
    auto derived = first_kind_from_second(flag_whitney_vector(p, WhitneyKind::second), p->rank());
    CHECK(derived == flag_whitney_vector(p, WhitneyKind::first));
  }
  for (const char* name : {"cube 3", "generic 3 5", "pyramid 4"}) {
    auto faces = share(load_fixture(name).polytope.face_lattice());
    auto derived = first_kind_from_second(flag_whitney_vector(faces, WhitneyKind::second), faces->rank());
    CHECK_MESSAGE(derived == flag_whitney_vector(faces, WhitneyKind::first), name);
  }
}

TEST_CASE("rank chain values match flag numbers") {
  auto b3 = share(GradedPoset::boolean(3));
  auto z = zeta<Rational>(b3);
  CHECK(rank_chain_value<Rational>({&z, &z, &z}, {1, 2}) == 6);
  CHECK_THROWS_AS(rank_chain_value<Rational>({&z, &z}, {1, 2}), Error);
}
