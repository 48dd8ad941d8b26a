#pragma once

#include <cstdint>
#include <memory>

#include "anglekit/incidence.hpp"
#include "anglekit/polytope.hpp"

namespace anglekit {

/// Nonzero vectors z_1..z_n in Q^d; also read as the central arrangement of the z_i^perp.
struct GeneratorConfiguration {
  RationalMatrix generators;
  std::size_t dim = 0;

  GeneratorConfiguration() = default;
  GeneratorConfiguration(RationalMatrix gens, std::size_t d);
  std::size_t size() const { return generators.size(); }
  std::size_t rank() const;
};

/// Sign vector in {-1,0,1}^n with a realizing point.
struct Covector {
  std::vector<int> signs;
  RationalVector witness;
  bool operator<(const Covector& o) const { return signs < o.signs; }
};

/// All realizable sign vectors, lexicographic with - < 0 < +.
std::vector<Covector> covectors(const GeneratorConfiguration& cfg);
std::vector<int> sign_vector(const GeneratorConfiguration& cfg, const RationalVector& p);

/// Sum of the segments [-z_i, z_i]; faces come from the covectors.
Polytope zonotope(const GeneratorConfiguration& cfg);

enum class FlatOrientation { inclusion, arrangement };

/// Flats as closed generator subsets. inclusion: spans of generator subsets
/// ranked by dimension. arrangement: intersections of the hyperplanes z_i^perp
/// under reverse inclusion, ranked by codimension.
struct FlatLattice {
  GeneratorConfiguration config;
  FlatOrientation orientation = FlatOrientation::inclusion;
  std::vector<std::vector<std::size_t>> flats;  // closed index sets, same order as poset elements
  std::vector<LinearSubspace> subspaces;
  PosetPtr poset;
};

FlatLattice flat_lattice(const GeneratorConfiguration& cfg, FlatOrientation orientation = FlatOrientation::inclusion);

/// Whitney numbers of both kinds by rank.
struct WhitneyNumbers {
  std::vector<Rational> first;   // sum of mu(0, x) over rank k
  std::vector<Rational> second;  // number of elements of rank k
};
WhitneyNumbers whitney(const PosetPtr& lattice);

/// Coefficients (index = power of t) of sum over x of |mu(x, 1)| t^{rank - rank x}.
std::vector<Integer> cocharacteristic(const PosetPtr& lattice);
/// Closed form for d + j generic vectors in Q^d.
std::vector<Integer> generic_cocharacteristic(std::size_t d, std::size_t j);
/// Characteristic polynomial sum mu(0, x) t^{rank - rank x}, coefficients by power.
std::vector<Integer> characteristic(const PosetPtr& lattice);

/// n vectors in Q^d with every d-subset independent, fixed by the seed.
GeneratorConfiguration generic_configuration(std::size_t d, std::size_t n, std::uint64_t seed);
bool is_generic(const GeneratorConfiguration& cfg);

/// Every 2-face has an even number of edges with antipodal edges parallel.
bool is_belt_polytope(const Polytope& p);

/// Lattice of the direction spaces L(F) of nonempty faces, ranked by dimension,
/// with the map from faces to flats (the empty face maps to nothing).
struct PolytopeFlats {
  std::vector<LinearSubspace> flats;
  PosetPtr poset;
  std::vector<std::size_t> face_to_flat;  // entry for the empty face is unused
};
PolytopeFlats polytope_flats(const Polytope& p);

/// Face lattice -> flats with a new bottom, F -> L(F), empty face -> new bottom.
PosetMap face_to_flat_map(const Polytope& p, const PolytopeFlats& flats, PosetPtr face_lattice, PosetPtr flats0);

/// Number of vertices v with w in T_v Z, for a direction w off every facet hyperplane.
std::size_t tangent_cone_vertex_count(const Polytope& zonotope, const RationalVector& w);

}  // namespace anglekit
