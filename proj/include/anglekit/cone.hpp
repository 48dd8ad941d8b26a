#pragma once

#include <memory>
#include <string>

#include "anglekit/rational.hpp"
#include "anglekit/subspace.hpp"

namespace anglekit {

/// Inequality description: <n, x> >= 0 for each facet normal, <e, x> = 0 for each equation.
/// Facet normals lie in the span of the cone and are irredundant.
struct HalfspaceDescription {
  RationalMatrix facets;
  RationalMatrix equations;
};

/// Polyhedral cone cone(g_1, ..., g_m) in Q^d. Immutable; the inequality
/// description is computed on first use and shared between copies.
class Cone {
 public:
  Cone(RationalMatrix generators, std::size_t ambient_dim);
  /// Trusts the supplied description (facets + equations) of the same cone.
  Cone(RationalMatrix generators, std::size_t ambient_dim, HalfspaceDescription description);

  static Cone whole_space(std::size_t d);
  static Cone origin(std::size_t d);
  static Cone halfspace(const RationalVector& inner_normal);

  std::size_t ambient_dim() const { return ambient_; }
  const RationalMatrix& generators() const { return generators_; }
  std::size_t dim() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == ambient_; }
  LinearSubspace span() const { return LinearSubspace(generators_, ambient_); }

  const HalfspaceDescription& description() const;
  bool has_description() const;
  /// All inner normals, equations expanded into +- pairs.
  RationalMatrix inequalities() const;
  bool is_whole_space() const;

  bool contains(const RationalVector& x) const;
  bool contains_in_interior(const RationalVector& x) const;
  bool contains(const Cone& other) const;
  bool same_set(const Cone& other) const;

  Cone polar() const;

  /// Sorted primitive facet and equation normals; equal cones give equal keys.
  std::string canonical_key() const;

 private:
  struct Cache;
  RationalMatrix generators_;
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// Facets by enumeration over (r-1)-subsets of generators, r = rank.
HalfspaceDescription enumerate_facets(const RationalMatrix& generators, std::size_t ambient_dim);

}  // namespace anglekit
