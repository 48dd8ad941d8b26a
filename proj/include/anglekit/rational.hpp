#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace anglekit {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
/// Row-major: each entry is one row.
using RationalMatrix = std::vector<RationalVector>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts "p/q", integers and finite decimals ("0.25").
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);
Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& s, const RationalVector& a);
bool is_zero(const RationalVector& v);

/// Scales v to coprime integers, keeping the direction.
RationalVector primitive(const RationalVector& v);
/// Primitive vector with first nonzero entry positive; also reports the flip.
RationalVector canonical_direction(const RationalVector& v, bool* flipped = nullptr);

std::vector<double> to_double(const RationalVector& v);

/// Fraction-free (Bareiss) rank.
std::size_t rank(const RationalMatrix& rows);
Rational determinant(const RationalMatrix& square);

/// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& rows, std::size_t ncols);

/// Basis of {x : rows * x = 0}, scaled to primitive integer vectors.
RationalMatrix nullspace(const RationalMatrix& rows, std::size_t ncols);

/// Indices of a maximal independent subset, chosen greedily in order.
std::vector<std::size_t> independent_rows(const RationalMatrix& rows);

}  // namespace anglekit
