#pragma once

#include <optional>

#include "anglekit/rational.hpp"

namespace anglekit {

/// Finds x >= 0 with A x = b (exact phase-one simplex, Bland's rule).
std::optional<RationalVector> nonnegative_solution(const RationalMatrix& A, const RationalVector& b);

/// Some lambda >= 0 with sum lambda_i g_i = x, if x lies in the cone.
std::optional<RationalVector> conic_combination(const RationalMatrix& generators,
                                                const RationalVector& x);

/// Some p with sign(<v_i, p>) = signs[i] for every i.
std::optional<RationalVector> sign_witness(const RationalMatrix& vectors, const std::vector<int>& signs);

}  // namespace anglekit
