#include "anglekit/lp.hpp"

namespace anglekit {

std::optional<RationalVector> nonnegative_solution(const RationalMatrix& A, const RationalVector& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw Error("nonnegative_solution: size mismatch");
  const std::size_t n = m ? A[0].size() : 0;
  if (m == 0) return zero_vector(n);

  // Tableau columns: n originals, m artificials, rhs.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m, zero_vector(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = neg ? Rational(-A[i][j]) : A[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = neg ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs for minimizing the artificial sum.
  RationalVector cost = zero_vector(width);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen for phase one
    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (sgn(cost[width - 1]) != 0) return std::nullopt;
  RationalVector x = zero_vector(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
    else if (sgn(t[i][width - 1]) != 0)
      return std::nullopt;
  return x;
}

std::optional<RationalVector> conic_combination(const RationalMatrix& generators,
                                                const RationalVector& x) {
  const std::size_t d = x.size();
  if (generators.empty()) {
    if (is_zero(x)) return RationalVector{};
    return std::nullopt;
  }
  RationalMatrix A(d, zero_vector(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != d) throw Error("conic_combination: dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) A[i][j] = generators[j][i];
  }
  return nonnegative_solution(A, x);
}

std::optional<RationalVector> sign_witness(const RationalMatrix& vectors, const std::vector<int>& signs) {
  if (vectors.size() != signs.size()) throw Error("sign_witness: size mismatch");
  if (vectors.empty()) return RationalVector{};
  const std::size_t d = vectors[0].size();
  std::size_t strict = 0;
  for (int s : signs) strict += (s != 0);
  // p = u - w with u, w >= 0; strict rows get a surplus: s <v,p> - e = 1.
  const std::size_t n = 2 * d + strict;
  RationalMatrix A;
  RationalVector b;
  std::size_t e = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    RationalVector row = zero_vector(n);
    int s = signs[i] == 0 ? 1 : signs[i];
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = s * vectors[i][k];
      row[d + k] = -s * vectors[i][k];
    }
    if (signs[i] != 0) {
      row[2 * d + e++] = -1;
      b.emplace_back(1);
    } else {
      b.emplace_back(0);
    }
    A.push_back(std::move(row));
  }
  auto sol = nonnegative_solution(A, b);
  if (!sol) return std::nullopt;
  RationalVector p(d);
  for (std::size_t k = 0; k < d; ++k) p[k] = (*sol)[k] - (*sol)[d + k];
  return primitive(p);
}

}  // namespace anglekit
