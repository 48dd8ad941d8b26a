#pragma once

#include <map>
#include <optional>

#include "anglekit/cone.hpp"
#include "anglekit/poset.hpp"
#include "anglekit/subspace.hpp"

namespace anglekit {

/// <normal, x> <= offset, with normal inside the direction space of the polytope.
struct Facet {
  RationalVector normal;
  Rational offset;
  std::vector<std::size_t> vertices;
};

struct Face {
  std::vector<std::size_t> vertices;  // sorted
  int dim = -1;
  LinearSubspace direction;           // L(F)
  std::vector<std::size_t> subfaces;  // faces covered by this one
};

/// Outer unit-free normal of a facet H of a face G, lying in L(G).
struct RelativeFacet {
  std::size_t facet;  // face index of H
  RationalVector normal;
};

/// Convex hull of finitely many rational points. Faces are indexed 0..n-1 with
/// index 0 the empty face and the last index the polytope itself.
class Polytope {
 public:
  explicit Polytope(RationalMatrix vertices);
  /// Uses a known facet list; each facet is checked against the vertices.
  Polytope(RationalMatrix vertices, std::vector<Facet> facets);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return faces_.back().dim; }
  const RationalMatrix& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t i) const { return faces_[i]; }
  std::size_t empty_face() const { return 0; }
  std::size_t top() const { return faces_.size() - 1; }
  std::optional<std::size_t> find_face(const std::vector<std::size_t>& sorted_vertices) const;
  std::vector<std::size_t> faces_of_dim(int k) const;
  std::vector<std::size_t> f_vector() const;
  bool face_contains(std::size_t big, std::size_t small) const;

  /// Face lattice, ranked by dim + 1 (empty face has rank 0).
  const GradedPoset& face_lattice() const { return lattice_; }
  const LinearSubspace& direction_space() const { return faces_.back().direction; }
  RationalVector relative_interior_point(std::size_t face) const;
  const std::vector<RelativeFacet>& relative_facets(std::size_t face) const { return relative_facets_[face]; }

 private:
  void build(std::vector<Facet> facets);

  RationalMatrix vertices_;
  std::size_t ambient_ = 0;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::map<std::vector<std::size_t>, std::size_t> face_index_;
  std::vector<std::vector<std::size_t>> containing_;  // faces containing each face
  std::vector<std::vector<RelativeFacet>> relative_facets_;
  GradedPoset lattice_;
};

/// T_F G = cone(G - q), q in relint F, plus L(G)^perp; defaults to G = P.
Cone tangent_cone(const Polytope& p, std::size_t face, std::optional<std::size_t> within = std::nullopt);
/// N_F G: outer normals of the facets of G containing F, plus L(G)^perp.
Cone normal_cone(const Polytope& p, std::size_t face, std::optional<std::size_t> within = std::nullopt);
/// O_F G = N_F G + L(F).
Cone outer_cone(const Polytope& p, std::size_t face, std::optional<std::size_t> within = std::nullopt);
/// cone{(v, 1)} in Q^{d+1}.
Cone homogenize(const Polytope& p);

}  // namespace anglekit
