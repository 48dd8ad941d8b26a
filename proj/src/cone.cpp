#include "anglekit/cone.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>

#include "anglekit/lp.hpp"

namespace anglekit {

struct Cone::Cache {
  std::once_flag once;
  std::atomic<bool> ready{false};
  HalfspaceDescription description;
};

namespace {

RationalMatrix distinct_directions(const RationalMatrix& gens) {
  std::set<RationalVector> seen;
  RationalMatrix out;
  for (const auto& g : gens) {
    if (is_zero(g)) continue;
    auto p = primitive(g);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

HalfspaceDescription enumerate_facets(const RationalMatrix& generators, std::size_t d) {
  HalfspaceDescription out;
  RationalMatrix gens = distinct_directions(generators);
  LinearSubspace span(gens, d);
  out.equations = span.orthogonal_complement().basis();
  const std::size_t r = span.dim();
  if (r == 0) return out;

  std::set<RationalVector> found;
  std::vector<std::size_t> idx(r - 1);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (gens.size() < r - 1) return out;
  do {
    RationalMatrix rows;
    for (auto i : idx) rows.push_back(gens[i]);
    if (rank(rows) != r - 1) continue;
    rows.insert(rows.end(), out.equations.begin(), out.equations.end());
    auto ns = nullspace(rows, d);
    if (ns.size() != 1) continue;
    const RationalVector& n = ns[0];
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int s = sgn(dot(n, g));
      pos |= s > 0;
      neg |= s < 0;
      if (pos && neg) break;
    }
    if (pos && neg) continue;
    found.insert(neg ? primitive(-n) : primitive(n));
  } while (next_combination(idx, gens.size()));
  out.facets.assign(found.begin(), found.end());
  return out;
}

Cone::Cone(RationalMatrix generators, std::size_t ambient_dim)
    : generators_(std::move(generators)), ambient_(ambient_dim), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_)
    if (g.size() != ambient_) throw Error("cone generator has wrong dimension");
  dim_ = rank(generators_);
}

Cone::Cone(RationalMatrix generators, std::size_t ambient_dim, HalfspaceDescription description)
    : Cone(std::move(generators), ambient_dim) {
  for (const auto& n : description.facets)
    if (n.size() != ambient_) throw Error("facet normal has wrong dimension");
  std::call_once(cache_->once, [&] {
    cache_->description = std::move(description);
    cache_->ready = true;
  });
}

Cone Cone::whole_space(std::size_t d) {
  RationalMatrix gens;
  for (std::size_t i = 0; i < d; ++i) {
    gens.push_back(unit_vector(d, i));
    gens.push_back(-unit_vector(d, i));
  }
  return Cone(gens, d, HalfspaceDescription{});
}

Cone Cone::origin(std::size_t d) {
  HalfspaceDescription h;
  for (std::size_t i = 0; i < d; ++i) h.equations.push_back(unit_vector(d, i));
  return Cone({}, d, h);
}

Cone Cone::halfspace(const RationalVector& inner) {
  const std::size_t d = inner.size();
  if (is_zero(inner)) throw Error("halfspace with zero normal");
  RationalMatrix gens = LinearSubspace({inner}, d).orthogonal_complement().basis();
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < k; ++i) gens.push_back(-gens[i]);
  gens.push_back(inner);
  return Cone(gens, d, HalfspaceDescription{{primitive(inner)}, {}});
}

const HalfspaceDescription& Cone::description() const {
  std::call_once(cache_->once, [&] {
    cache_->description = enumerate_facets(generators_, ambient_);
    cache_->ready = true;
  });
  return cache_->description;
}

bool Cone::has_description() const { return cache_->ready; }

RationalMatrix Cone::inequalities() const {
  const auto& h = description();
  RationalMatrix out = h.facets;
  for (const auto& e : h.equations) {
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

bool Cone::is_whole_space() const { return is_full_dimensional() && description().facets.empty(); }

bool Cone::contains(const RationalVector& x) const {
  if (x.size() != ambient_) throw Error("cone membership: dimension mismatch");
  if (!has_description()) return conic_combination(generators_, x).has_value();
  const auto& h = description();
  for (const auto& e : h.equations)
    if (sgn(dot(e, x)) != 0) return false;
  for (const auto& n : h.facets)
    if (sgn(dot(n, x)) < 0) return false;
  return true;
}

bool Cone::contains_in_interior(const RationalVector& x) const {
  if (!is_full_dimensional()) return false;
  for (const auto& n : description().facets)
    if (sgn(dot(n, x)) <= 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const RationalVector& g) { return contains(g); });
}

bool Cone::same_set(const Cone& other) const { return contains(other) && other.contains(*this); }

Cone Cone::polar() const {
  const auto& h = description();
  RationalMatrix gens;
  for (const auto& n : h.facets) gens.push_back(-n);
  for (const auto& e : h.equations) {
    gens.push_back(e);
    gens.push_back(-e);
  }
  return Cone(gens, ambient_);
}

std::string Cone::canonical_key() const {
  const auto& h = description();
  std::vector<std::string> parts;
  for (const auto& n : h.facets) parts.push_back(to_string(primitive(n)));
  std::sort(parts.begin(), parts.end());
  std::string key = std::to_string(ambient_) + ":";
  for (const auto& p : parts) key += p;
  RationalMatrix eq = h.equations;
  rref(eq, ambient_);
  key += "|";
  for (const auto& e : eq) key += to_string(primitive(e));
  return key;
}

}  // namespace anglekit
