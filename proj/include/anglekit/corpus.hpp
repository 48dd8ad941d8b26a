#pragma once

#include <string>
#include <utility>
#include <vector>

#include "anglekit/incidence.hpp"

namespace anglekit {

/// Every polytope fixture of dimension <= 4, built-in families and bundled JSON files.
std::vector<std::string> polytope_corpus();
/// The members of polytope_corpus() that carry generators.
std::vector<std::string> zonotope_corpus();

/// Lattices of flats (and two small posets) used by the product-formula report.
std::vector<std::pair<std::string, GradedPoset>> product_formula_lattices();
/// Face lattices of fixtures, plus their lattices of flats when they are zonotopes.
std::vector<std::pair<std::string, PosetPtr>> first_kind_posets();

}  // namespace anglekit
