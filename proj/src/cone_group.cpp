#include "anglekit/cone_group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace anglekit {

ConeCombination& ConeCombination::add(long coefficient, Cone cone, bool open) {
  if (cone.ambient_dim() != ambient_) throw Error("cone combination: dimension mismatch");
  if (open && !cone.is_full_dimensional()) throw Error("open term needs a full-dimensional cone");
  terms_.push_back(ConeTerm{coefficient, std::move(cone), open});
  return *this;
}

long evaluate_at(const ConeCombination& f, const RationalVector& p) {
  if (p.size() != f.ambient_dim()) throw Error("evaluate_at: dimension mismatch");
  long total = 0;
  for (const auto& t : f.terms()) {
    bool in = t.open ? t.cone.contains_in_interior(p) : t.cone.contains(p);
    if (in) total += t.coefficient;
  }
  return total;
}

namespace {

/// Terms rewritten against a shared table of boundary normals.
struct Compiled {
  struct Term {
    long coefficient;
    std::vector<std::size_t> facets, equations;
    std::vector<int> orientation;  // -1 when the facet normal is the negated table entry
    bool open;
  };
  std::vector<Term> terms;
};

Compiled compile(const ConeCombination& f, std::map<RationalVector, std::size_t>& table) {
  bool flipped = false;
  auto index = [&](const RationalVector& n) {
    auto key = canonical_direction(n, &flipped);
    return table.emplace(key, table.size()).first->second;
  };
  Compiled c;
  for (const auto& t : f.terms()) {
    Compiled::Term term{t.coefficient, {}, {}, {}, t.open};
    const auto& h = t.cone.description();
    for (const auto& n : h.facets) {
      term.facets.push_back(index(n));
      term.orientation.push_back(flipped ? -1 : 1);
    }
    for (const auto& e : h.equations) term.equations.push_back(index(e));
    c.terms.push_back(std::move(term));
  }
  return c;
}

long evaluate_compiled(const Compiled& c, const std::vector<int>& signs) {
  long total = 0;
  for (const auto& term : c.terms) {
    bool in = true;
    for (auto e : term.equations)
      if (signs[e] != 0) in = false;
    for (std::size_t k = 0; in && k < term.facets.size(); ++k) {
      int s = signs[term.facets[k]] * term.orientation[k];
      if (s < 0 || (term.open && s == 0)) in = false;
    }
    if (in) total += term.coefficient;
  }
  return total;
}

}  // namespace

AeVerdict ae_equal(const ConeCombination& f, const ConeCombination& g, std::size_t trials, std::uint64_t seed) {
  if (f.ambient_dim() != g.ambient_dim()) throw Error("ae_equal: dimension mismatch");
  const std::size_t d = f.ambient_dim();
  std::map<RationalVector, std::size_t> table;
  Compiled cf = compile(f, table), cg = compile(g, table);
  std::vector<RationalVector> normals(table.size());
  for (const auto& [n, i] : table) normals[i] = n;

  std::mt19937_64 rng(seed);
  AeVerdict verdict;
  std::vector<int> signs(normals.size());
  while (verdict.trials < trials) {
    RationalVector p(d);
    for (auto& x : p) {
      long den = static_cast<long>(rng() % 65536) + 1;
      long num = static_cast<long>(rng() % static_cast<std::uint64_t>(16 * den + 1)) - 8 * den;
      x = Rational(num, den);
      x.canonicalize();
    }
    bool boundary = false;
    for (std::size_t i = 0; i < normals.size() && !boundary; ++i) {
      signs[i] = sgn(dot(normals[i], p));
      boundary = signs[i] == 0;
    }
    if (boundary) {
      ++verdict.rejected;
      continue;
    }
    ++verdict.trials;
    long a = evaluate_compiled(cf, signs), b = evaluate_compiled(cg, signs);
    if (a != b) {
      verdict.equal = false;
      verdict.witness = p;
      verdict.lhs = a;
      verdict.rhs = b;
      return verdict;
    }
  }
  return verdict;
}

std::vector<ConeFace> cone_faces(const Cone& c) {
  const auto& facets = c.description().facets;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < c.generators().size(); ++i)
    if (!is_zero(c.generators()[i])) all.push_back(i);
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all}, found{all};
  while (!queue.empty()) {
    auto face = std::move(queue.back());
    queue.pop_back();
    for (const auto& n : facets) {
      std::vector<std::size_t> sub;
      for (auto i : face)
        if (sgn(dot(n, c.generators()[i])) == 0) sub.push_back(i);
      if (sub.size() != face.size() && seen.insert(sub).second) {
        queue.push_back(sub);
        found.push_back(sub);
      }
    }
  }
  std::vector<ConeFace> out;
  for (const auto& idx : found) {
    ConeFace face;
    for (auto i : idx) face.generators.push_back(c.generators()[i]);
    face.dim = rank(face.generators);
    for (const auto& n : facets)
      if (std::all_of(face.generators.begin(), face.generators.end(),
                      [&](const RationalVector& g) { return sgn(dot(n, g)) == 0; }))
        face.tight_facets.push_back(n);
    out.push_back(std::move(face));
  }
  return out;
}

std::pair<ConeCombination, ConeCombination> brianchon_gram(const Cone& c) {
  if (!c.is_full_dimensional()) throw Error("Brianchon-Gram needs a full-dimensional cone");
  const std::size_t D = c.ambient_dim();
  ConeCombination lhs(D), rhs(D);
  for (const auto& face : cone_faces(c)) {
    RationalMatrix gens = c.generators();
    for (const auto& g : face.generators) gens.push_back(-g);
    HalfspaceDescription h{face.tight_facets, {}};
    lhs.add(face.dim % 2 ? -1 : 1, Cone(gens, D, h));
  }
  RationalMatrix neg;
  for (const auto& g : c.generators()) neg.push_back(-g);
  HalfspaceDescription hn;
  for (const auto& n : c.description().facets) hn.facets.push_back(-n);
  rhs.add(D % 2 ? -1 : 1, Cone(neg, D, hn), true);
  return {lhs, rhs};
}

std::pair<ConeCombination, ConeCombination> gram_combination(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  if (p.dim() != static_cast<int>(d)) throw Error("Gram combination needs a full-dimensional polytope");
  ConeCombination lhs(d), rhs(d);
  for (std::size_t f = 1; f < p.top(); ++f) lhs.add(p.face(f).dim % 2 ? -1 : 1, tangent_cone(p, f));
  rhs.add(d % 2 ? 1 : -1, Cone::whole_space(d));
  return {lhs, rhs};
}

std::pair<ConeCombination, ConeCombination> vertex_partition(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  ConeCombination lhs(d), rhs(d);
  for (auto v : p.faces_of_dim(0)) lhs.add(1, outer_cone(p, v));
  rhs.add(1, Cone::whole_space(d));
  return {lhs, rhs};
}

}  // namespace anglekit
