#pragma once

#include <cstdint>
#include <map>

#include "anglekit/incidence.hpp"

namespace anglekit {

/// Subsets of ranks encoded as bit masks (bit i is rank i).
using RankSet = std::uint32_t;
std::vector<std::size_t> ranks_of(RankSet s);
RankSet rank_set(const std::vector<std::size_t>& ranks);

/// (f_0 *_{s_1} f_1 *_{s_2} ... *_{s_k} f_k)(bottom, top), s_1 < ... < s_k.
template <class T>
T rank_chain_value(const std::vector<const IncidenceFunction<T>*>& fs, const std::vector<std::size_t>& ranks) {
  if (fs.size() != ranks.size() + 1) throw Error("rank_chain_value needs one more function than ranks");
  const auto& p = fs[0]->poset();
  for (std::size_t i = 1; i < ranks.size(); ++i)
    if (ranks[i] <= ranks[i - 1]) throw Error("ranks must increase");
  if (!ranks.empty() && ranks.back() > p.rank()) throw Error("rank out of range");
  std::vector<std::size_t> level{p.bottom()};
  std::vector<T> weight{T(1)};
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    const auto& next = p.elements_of_rank(ranks[j]);
    std::vector<T> w(next.size(), T(0));
    for (std::size_t y = 0; y < next.size(); ++y)
      for (std::size_t x = 0; x < level.size(); ++x)
        if (p.leq(level[x], next[y])) w[y] += weight[x] * (*fs[j])(level[x], next[y]);
    level = next;
    weight = std::move(w);
  }
  T total(0);
  for (std::size_t x = 0; x < level.size(); ++x) total += weight[x] * (*fs.back())(level[x], p.top());
  return total;
}

enum class WhitneyKind { first, second };

/// First kind: (mu *_{s_1} ... mu *_{s_k} zeta)(0,1). Second kind: all zeta, i.e. chain counts.
Rational flag_whitney(const PosetPtr& p, WhitneyKind kind, RankSet s);
/// All subsets of the interior ranks 1..rank-1.
std::map<RankSet, Rational> flag_whitney_vector(const PosetPtr& p, WhitneyKind kind);
/// Whitney numbers by rank: first kind sum mu(0, x), second kind counts.
std::vector<Rational> whitney_numbers(const PosetPtr& p, WhitneyKind kind);

/// Strict chains b_1 < ... < b_k inside the open interval (bottom, top).
using Chain = std::vector<std::size_t>;
std::vector<Chain> interior_chains(const GradedPoset& p);

/// open: g(0,b_1) g(b_1,b_2) ... g(b_{k-1},b_k); closed also multiplies g(b_k, 1).
enum class ChainConvention { open, closed };
std::map<Chain, Rational> chain_coefficients(const IncidenceFunction<Rational>& g, ChainConvention c);

/// Coefficients after z -> 1/z in every chain variable, in the basis z/(1-z):
/// result[A] = sum over chains B containing A of (-1)^{|B|} c[B].
std::map<Chain, Rational> reciprocal_transform(const std::map<Chain, Rational>& c);

struct ReciprocityOutcome {
  bool holds = true;
  Chain mismatch;
  Rational transformed, expected;
};

/// open convention: transformed coefficients of g against those of g^{-1}.
/// closed convention: against the negated coefficients of g^{-1}.
ReciprocityOutcome reciprocity_check(const IncidenceFunction<Rational>& g, ChainConvention c);

/// Graded specialisation of reciprocal_transform on flag vectors over interior ranks.
std::map<RankSet, Rational> reciprocal_flag_transform(const std::map<RankSet, Rational>& f, std::size_t rank);
/// First-kind flag numbers obtained from the second-kind ones alone.
std::map<RankSet, Rational> first_kind_from_second(const std::map<RankSet, Rational>& second, std::size_t rank);

}  // namespace anglekit
