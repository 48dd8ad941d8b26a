#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "anglekit/arrangement.hpp"
#include "anglekit/flags.hpp"
#include "anglekit/report.hpp"

namespace anglekit {

/// Whitney numbers of generic zonotopes: the matrix W_i(Z_j) for d + j generic vectors
/// against binomials C(d + j, i), and the cocharacteristic coefficient matrix against its
/// Pascal reduction C(i + j, j); i, j = 0..d-1.
struct UniquenessMatrices {
  std::size_t d = 0;
  RationalMatrix exterior;         // rows i, columns j
  RationalMatrix binomial;         // C(d + j, i)
  RationalMatrix cocharacteristic; // rows j, columns powers of t 0..d
  RationalMatrix pascal;           // C(i + j, j)
  Rational exterior_determinant, pascal_determinant;
  std::size_t cocharacteristic_rank = 0;
};
UniquenessMatrices uniqueness_matrices(std::size_t d, std::uint64_t seed = 0);
CheckReport uniqueness_report(std::size_t d, std::uint64_t seed = 0);

/// Cocharacteristic polynomials of generic zonotopes from the lattice against the recursion.
CheckReport cocharacteristic_report(std::size_t max_d, std::size_t max_j, std::uint64_t seed = 0);

/// Random full-rank configuration in dimension 2..max_d with small integer entries
/// (parallel and dependent vectors allowed).
GeneratorConfiguration random_configuration(std::mt19937_64& rng, std::size_t max_d);
/// Vertices v of the zonotope with w in T_v Z against (-1)^d mu(0, 1) of the flats.
CheckReport greene_zaslavsky_report(std::size_t arrangements, std::size_t directions, std::size_t max_d,
                                    std::uint64_t seed);

/// Random graded poset of the given rank (cover relations between adjacent ranks only).
GradedPoset random_graded_poset(std::mt19937_64& rng, std::size_t rank, std::size_t max_width = 3);
/// Random rational incidence function with ones on the diagonal.
IncidenceFunction<Rational> random_unipotent(std::mt19937_64& rng, const PosetPtr& p);

/// Reciprocity on random unipotent functions of random graded posets with rank 2..max_rank.
CheckReport reciprocity_report(std::size_t functions, std::size_t max_rank, std::uint64_t seed, ChainConvention c);
/// First-kind flag numbers recovered from chain counts against direct Moebius sums.
CheckReport first_kind_report(const std::vector<std::pair<std::string, PosetPtr>>& posets);

}  // namespace anglekit
