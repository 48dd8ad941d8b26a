#include "anglekit/flags.hpp"

#include <bit>
#include <functional>

namespace anglekit {

std::vector<std::size_t> ranks_of(RankSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (s >> i & 1u) out.push_back(i);
  return out;
}

RankSet rank_set(const std::vector<std::size_t>& ranks) {
  RankSet s = 0;
  for (auto r : ranks) {
    if (r >= 32) throw Error("rank too large for a rank set");
    s |= RankSet(1) << r;
  }
  return s;
}

Rational flag_whitney(const PosetPtr& p, WhitneyKind kind, RankSet s) {
  auto z = zeta<Rational>(p);
  auto ranks = ranks_of(s);
  std::vector<const IncidenceFunction<Rational>*> fs(ranks.size() + 1, &z);
  if (kind == WhitneyKind::first) {
    auto m = moebius<Rational>(p);
    for (std::size_t i = 0; i < ranks.size(); ++i) fs[i] = &m;
    return rank_chain_value(fs, ranks);
  }
  return rank_chain_value(fs, ranks);
}

std::map<RankSet, Rational> flag_whitney_vector(const PosetPtr& p, WhitneyKind kind) {
  auto z = zeta<Rational>(p);
  auto m = moebius<Rational>(p);
  std::map<RankSet, Rational> out;
  const std::size_t r = p->rank();
  const RankSet full = r >= 1 ? ((RankSet(1) << r) - 2) : 0;  // bits 1..r-1
  for (RankSet s = 0;; s = (s - full) & full) {
    auto ranks = ranks_of(s);
    std::vector<const IncidenceFunction<Rational>*> fs(ranks.size() + 1, &z);
    if (kind == WhitneyKind::first)
      for (std::size_t i = 0; i < ranks.size(); ++i) fs[i] = &m;
    out[s] = rank_chain_value(fs, ranks);
    if (s == full) break;
  }
  return out;
}

std::vector<Rational> whitney_numbers(const PosetPtr& p, WhitneyKind kind) {
  std::vector<Rational> out(p->rank() + 1, Rational(0));
  if (kind == WhitneyKind::second) {
    for (std::size_t k = 0; k <= p->rank(); ++k) out[k] = static_cast<long>(p->elements_of_rank(k).size());
    return out;
  }
  auto m = moebius<Rational>(p);
  for (std::size_t x = 0; x < p->size(); ++x) out[p->rank(x)] += m(p->bottom(), x);
  return out;
}

std::vector<Chain> interior_chains(const GradedPoset& p) {
  std::vector<Chain> out{{}};
  Chain current;
  std::function<void(std::size_t)> extend = [&](std::size_t last) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (x == p.top() || x == p.bottom() || !p.less(last, x)) continue;
      current.push_back(x);
      out.push_back(current);
      extend(x);
      current.pop_back();
    }
  };
  extend(p.bottom());
  return out;
}

std::map<Chain, Rational> chain_coefficients(const IncidenceFunction<Rational>& g, ChainConvention c) {
  const auto& p = g.poset();
  std::map<Chain, Rational> out;
  for (const auto& chain : interior_chains(p)) {
    Rational v = 1;
    std::size_t prev = p.bottom();
    for (auto b : chain) {
      v *= g(prev, b);
      prev = b;
    }
    if (c == ChainConvention::closed) v *= g(prev, p.top());
    out[chain] = v;
  }
  return out;
}

std::map<Chain, Rational> reciprocal_transform(const std::map<Chain, Rational>& c) {
  std::map<Chain, Rational> out;
  for (const auto& [chain, _] : c) out[chain] = 0;
  for (const auto& [chain, coeff] : c) {
    if (sgn(coeff) == 0) continue;
    const std::size_t k = chain.size();
    Rational signed_coeff = (k % 2) ? Rational(-coeff) : coeff;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
      Chain sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) sub.push_back(chain[i]);
      out[sub] += signed_coeff;
    }
  }
  return out;
}

ReciprocityOutcome reciprocity_check(const IncidenceFunction<Rational>& g, ChainConvention c) {
  auto transformed = reciprocal_transform(chain_coefficients(g, c));
  auto expected = chain_coefficients(inverse(g), c);
  ReciprocityOutcome out;
  for (const auto& [chain, value] : expected) {
    Rational want = c == ChainConvention::closed ? Rational(-value) : value;
    Rational got = transformed.count(chain) ? transformed.at(chain) : Rational(0);
    if (got != want) {
      out.holds = false;
      out.mismatch = chain;
      out.transformed = got;
      out.expected = want;
      return out;
    }
  }
  return out;
}

std::map<RankSet, Rational> reciprocal_flag_transform(const std::map<RankSet, Rational>& f, std::size_t rank) {
  std::map<RankSet, Rational> out;
  const RankSet full = rank >= 1 ? ((RankSet(1) << rank) - 2) : 0;
  for (RankSet a = 0;; a = (a - full) & full) {
    Rational s = 0;
    for (const auto& [b, v] : f)
      if ((b & a) == a) s += (std::popcount(b) % 2) ? Rational(-v) : v;
    out[a] = s;
    if (a == full) break;
  }
  return out;
}

std::map<RankSet, Rational> first_kind_from_second(const std::map<RankSet, Rational>& second, std::size_t rank) {
  // Closed numbers (Moebius at every step) first, then the last factor becomes zeta.
  auto closed = reciprocal_flag_transform(second, rank);
  for (auto& [s, v] : closed) v = -v;
  std::map<RankSet, Rational> out;
  const RankSet full = rank >= 1 ? ((RankSet(1) << rank) - 2) : 0;
  for (RankSet s = 0;; s = (s - full) & full) {
    std::size_t top_rank = 0;
    for (std::size_t i = 0; i < 32; ++i)
      if (s >> i & 1u) top_rank = i;
    RankSet tail = 0;
    for (std::size_t i = top_rank + 1; i < rank; ++i) tail |= RankSet(1) << i;
    Rational v = 0;
    for (RankSet u = 0;; u = (u - tail) & tail) {
      Rational term = closed.at(s | u);
      v += (std::popcount(u) % 2) ? Rational(-term) : term;
      if (u == tail) break;
    }
    out[s] = -v;
    if (s == full) break;
  }
  return out;
}

}  // namespace anglekit
