#pragma once

#include "anglekit/rational.hpp"

namespace anglekit {

/// A linear subspace of Q^d stored by an independent basis.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  /// Span of the given vectors (dependent vectors are dropped).
  LinearSubspace(const RationalMatrix& spanning, std::size_t ambient_dim);
  static LinearSubspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const RationalVector& v) const;
  bool contains(const LinearSubspace& other) const;
  bool operator==(const LinearSubspace& other) const;

  LinearSubspace orthogonal_complement() const;
  LinearSubspace intersect(const LinearSubspace& other) const;
  LinearSubspace join(const LinearSubspace& other) const;

 private:
  RationalMatrix basis_;
  std::size_t ambient_ = 0;
};

}  // namespace anglekit
