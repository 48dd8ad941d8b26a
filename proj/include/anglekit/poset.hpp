#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "anglekit/rational.hpp"

namespace anglekit {

/// Finite graded poset with a unique minimum and maximum, given by its cover relation.
class GradedPoset {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;

  GradedPoset() = default;
  GradedPoset(std::size_t size, const std::vector<Cover>& covers, std::vector<std::string> labels = {});

  std::size_t size() const { return ranks_.size(); }
  std::size_t rank(std::size_t x) const { return ranks_[x]; }
  /// Rank of the maximum.
  std::size_t rank() const { return ranks_[top_]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool leq(std::size_t a, std::size_t b) const { return (reach_[a][b >> 6] >> (b & 63)) & 1u; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_[x]; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_[x]; }
  const std::vector<std::size_t>& elements_of_rank(std::size_t k) const;
  std::vector<Cover> covers() const;
  const std::string& label(std::size_t x) const { return labels_[x]; }

  /// Chain 0 < 1 < ... < n (rank n).
  static GradedPoset chain(std::size_t n);
  /// Boolean lattice of subsets of an n-set.
  static GradedPoset boolean(std::size_t n);
  GradedPoset product(const GradedPoset& other) const;
  GradedPoset dual() const;
  /// Restriction of the order to the kept elements (must keep both bounds).
  GradedPoset induced(const std::vector<bool>& keep) const;
  /// Adjoins a new minimum below the current one.
  GradedPoset with_new_bottom(const std::string& label = "empty") const;

  bool is_isomorphic(const GradedPoset& other) const;
  /// Rank sizes (number of elements of each rank).
  std::vector<std::size_t> rank_sizes() const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<std::size_t>> up_, down_, by_rank_;
  std::vector<std::vector<std::uint64_t>> reach_;
  std::vector<std::string> labels_;
  std::size_t bottom_ = 0, top_ = 0;
};

/// E(P) = P x C_1.
GradedPoset pyramid_operator(const GradedPoset& p);
/// Deletes the coatoms.
GradedPoset delete_coatoms(const GradedPoset& p);
/// M(P) = delete_coatoms(E(P)).
GradedPoset prism_operator(const GradedPoset& p);

}  // namespace anglekit
