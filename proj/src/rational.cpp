#include "anglekit/rational.hpp"

#include <algorithm>
#include <sstream>

namespace anglekit {

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ' && c != '\t') text.push_back(c);
  if (text.empty()) throw Error("empty rational");
  auto dot_pos = text.find('.');
  if (dot_pos != std::string::npos) {
    if (text.find('/') != std::string::npos) throw Error("malformed rational: " + raw);
    std::string digits = text.substr(0, dot_pos) + text.substr(dot_pos + 1);
    std::size_t scale = text.size() - dot_pos - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw Error("malformed rational: " + raw);
    Integer num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
      throw Error("malformed rational: " + raw);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  if (q.set_str(body, 10) != 0) throw Error("malformed rational: " + raw);
  if (q.get_den() == 0) throw Error("zero denominator: " + raw);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RationalVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ')';
  return out.str();
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector e = zero_vector(n);
  e[i] = 1;
  return e;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RationalVector operator*(const Rational& s, const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalVector primitive(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = (g == 0) ? Rational(0) : Rational(ints[i] / g);
  return r;
}

RationalVector canonical_direction(const RationalVector& v, bool* flipped) {
  RationalVector r = primitive(v);
  bool flip = false;
  for (const auto& x : r) {
    if (sgn(x) != 0) {
      flip = sgn(x) < 0;
      break;
    }
  }
  if (flip)
    for (auto& x : r) x = -x;
  if (flipped) *flipped = flip;
  return r;
}

std::vector<double> to_double(const RationalVector& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
  return r;
}

namespace {

std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& rows) {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    RationalVector p = primitive(row);
    std::vector<Integer> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i].get_num();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  auto m = integer_rows(rows);
  const std::size_t nr = m.size(), nc = m[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && m[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Rational determinant(const RationalMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  for (const auto& row : square)
    if (row.size() != n) throw Error("determinant of non-square matrix");
  RationalMatrix m = square;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

RationalMatrix nullspace(const RationalMatrix& rows, std::size_t ncols) {
  RationalMatrix m = rows;
  for (const auto& row : m)
    if (row.size() != ncols) throw Error("nullspace: inconsistent row length");
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v = zero_vector(ncols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const RationalMatrix& rows) {
  std::vector<std::size_t> chosen;
  RationalMatrix echelon;  // rows with distinct leading columns
  std::vector<std::size_t> leads;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    RationalVector v = rows[idx];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (sgn(v[leads[k]]) == 0) continue;
      Rational f = v[leads[k]] / echelon[k][leads[k]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * echelon[k][j];
    }
    std::size_t lead = 0;
    while (lead < v.size() && sgn(v[lead]) == 0) ++lead;
    if (lead == v.size()) continue;
    echelon.push_back(std::move(v));
    leads.push_back(lead);
    chosen.push_back(idx);
  }
  return chosen;
}

}  // namespace anglekit
