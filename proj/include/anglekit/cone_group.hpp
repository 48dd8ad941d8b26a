#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "anglekit/cone.hpp"
#include "anglekit/polytope.hpp"

namespace anglekit {

struct ConeTerm {
  long coefficient = 1;
  Cone cone;
  bool open = false;  // indicator of the interior instead of the closed cone
};

/// Formal integer combination of cone indicators.
class ConeCombination {
 public:
  explicit ConeCombination(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  ConeCombination& add(long coefficient, Cone cone, bool open = false);
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<ConeTerm>& terms() const { return terms_; }

 private:
  std::size_t ambient_;
  std::vector<ConeTerm> terms_;
};

long evaluate_at(const ConeCombination& f, const RationalVector& p);

struct AeVerdict {
  bool equal = true;
  std::optional<RationalVector> witness;
  long lhs = 0, rhs = 0;
  std::size_t trials = 0;
  std::size_t rejected = 0;  // points that landed on a boundary hyperplane
};

/// Compares f and g at `trials` random rational points off every boundary
/// hyperplane (coordinates a/b with |a/b| <= 8, b <= 2^16).
AeVerdict ae_equal(const ConeCombination& f, const ConeCombination& g, std::size_t trials, std::uint64_t seed);

/// Nonempty face of a cone: the generators lying on it.
struct ConeFace {
  RationalMatrix generators;
  std::size_t dim = 0;
  RationalMatrix tight_facets;
};
std::vector<ConeFace> cone_faces(const Cone& c);

/// Sum over nonempty faces F of (-1)^{dim F} [C + L(F)] against (-1)^{D} [int(-C)], D = ambient dim.
std::pair<ConeCombination, ConeCombination> brianchon_gram(const Cone& c);
/// Sum over proper nonempty faces F of (-1)^{dim F} [T_F P], with (-1)^{d+1} [R^d] as the other side.
std::pair<ConeCombination, ConeCombination> gram_combination(const Polytope& p);
/// Sum over vertices of [O_v P] against [R^d].
std::pair<ConeCombination, ConeCombination> vertex_partition(const Polytope& p);

}  // namespace anglekit
