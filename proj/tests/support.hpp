#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "anglekit/rational.hpp"

namespace testing_support {

inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline anglekit::RationalVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  anglekit::RationalVector v(n);
  for (auto& x : v) x = uniform_int(rng, -bound, bound);
  return v;
}

inline anglekit::RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  anglekit::RationalMatrix m;
  for (std::size_t i = 0; i < rows; ++i) m.push_back(random_vector(rng, cols, bound));
  return m;
}

/// Determinant by the permutation expansion; small sizes only.
inline anglekit::Rational leibniz_determinant(const anglekit::RationalMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  anglekit::Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    anglekit::Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace testing_support
