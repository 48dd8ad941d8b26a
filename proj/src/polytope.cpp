#include "anglekit/polytope.hpp"

#include <algorithm>
#include <set>

namespace anglekit {

namespace {

LinearSubspace affine_direction(const RationalMatrix& vertices, const std::vector<std::size_t>& idx,
                                std::size_t d) {
  RationalMatrix diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(vertices[idx[i]] - vertices[idx[0]]);
  return LinearSubspace(diffs, d);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_vertices(const RationalMatrix& vertices) {
  if (vertices.empty()) throw Error("polytope needs at least one vertex");
  const std::size_t d = vertices[0].size();
  for (const auto& v : vertices)
    if (v.size() != d) throw Error("vertices have inconsistent dimension");
  std::set<RationalVector> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw Error("duplicate vertex");
}

std::vector<Facet> enumerate_polytope_facets(const RationalMatrix& vertices) {
  const std::size_t d = vertices[0].size(), n = vertices.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  LinearSubspace dir = affine_direction(vertices, all, d);
  const std::size_t k = dir.dim();
  std::vector<Facet> facets;
  if (k == 0) return facets;
  const RationalMatrix perp = dir.orthogonal_complement().basis();

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    bool known = std::any_of(facets.begin(), facets.end(), [&](const Facet& f) {
      return std::includes(f.vertices.begin(), f.vertices.end(), idx.begin(), idx.end());
    });
    if (known) continue;
    RationalMatrix rows;
    for (std::size_t i = 1; i < k; ++i) rows.push_back(vertices[idx[i]] - vertices[idx[0]]);
    if (rank(rows) != k - 1) continue;
    rows.insert(rows.end(), perp.begin(), perp.end());
    auto ns = nullspace(rows, d);
    if (ns.size() != 1) continue;
    RationalVector normal = ns[0];
    Rational c = dot(normal, vertices[idx[0]]);
    bool above = false, below = false;
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < n; ++v) {
      int s = sgn(dot(normal, vertices[v]) - c);
      above |= s > 0;
      below |= s < 0;
      if (s == 0) on.push_back(v);
    }
    if (above && below) continue;
    if (above) {
      normal = -normal;
      c = -c;
    }
    facets.push_back(Facet{normal, c, on});
  } while (next_combination(idx, n));
  return facets;
}

}  // namespace

Polytope::Polytope(RationalMatrix vertices) : vertices_(std::move(vertices)) {
  check_vertices(vertices_);
  ambient_ = vertices_[0].size();
  build(enumerate_polytope_facets(vertices_));
}

Polytope::Polytope(RationalMatrix vertices, std::vector<Facet> facets) : vertices_(std::move(vertices)) {
  check_vertices(vertices_);
  ambient_ = vertices_[0].size();
  for (auto& f : facets) {
    f.vertices.clear();
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      int s = sgn(dot(f.normal, vertices_[v]) - f.offset);
      if (s > 0) throw Error("supplied facet cuts off a vertex");
      if (s == 0) f.vertices.push_back(v);
    }
  }
  build(std::move(facets));
}

void Polytope::build(std::vector<Facet> facets) {
  const std::size_t n = vertices_.size(), d = ambient_;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  LinearSubspace dir = affine_direction(vertices_, all, d);
  const int k = static_cast<int>(dir.dim());
  for (auto& f : facets) {
    f.normal = primitive(f.normal);
    f.offset = dot(f.normal, vertices_[f.vertices.at(0)]);
    if (!dir.contains(f.normal) && k == static_cast<int>(d)) throw Error("facet normal outside direction space");
    if (static_cast<int>(affine_direction(vertices_, f.vertices, d).dim()) != k - 1)
      throw Error("supplied facet has wrong dimension");
  }
  facets_ = std::move(facets);

  std::set<std::vector<std::size_t>> found{all, {}};
  std::vector<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto face = std::move(queue.back());
    queue.pop_back();
    for (const auto& f : facets_) {
      auto meet = intersect(face, f.vertices);
      if (meet.size() != face.size() && found.insert(meet).second) queue.push_back(meet);
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!found.count({v})) throw Error("point " + to_string(vertices_[v]) + " is not a vertex");

  faces_.clear();
  for (const auto& vs : found) {
    Face f;
    f.vertices = vs;
    if (vs.empty()) {
      f.dim = -1;
      f.direction = LinearSubspace({}, d);
    } else {
      f.direction = affine_direction(vertices_, vs, d);
      f.dim = static_cast<int>(f.direction.dim());
    }
    faces_.push_back(std::move(f));
  }
  std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) { return a.dim < b.dim; });
  if (faces_.back().dim != k) throw Error("internal: top face dimension mismatch");

  face_index_.clear();
  for (std::size_t i = 0; i < faces_.size(); ++i) face_index_[faces_[i].vertices] = i;

  std::vector<GradedPoset::Cover> covers;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < faces_.size(); ++g) {
    std::string l = "{";
    for (std::size_t i = 0; i < faces_[g].vertices.size(); ++i) l += (i ? "," : "") + std::to_string(faces_[g].vertices[i]);
    labels.push_back(l + "}");
    for (std::size_t f = 0; f < g; ++f) {
      if (faces_[f].dim + 1 != faces_[g].dim) continue;
      const auto& a = faces_[f].vertices;
      const auto& b = faces_[g].vertices;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        covers.emplace_back(f, g);
        faces_[g].subfaces.push_back(f);
      }
    }
  }
  lattice_ = GradedPoset(faces_.size(), covers, labels);

  relative_facets_.assign(faces_.size(), {});
  for (std::size_t g = 0; g < faces_.size(); ++g) {
    if (faces_[g].dim < 1) continue;
    const RationalMatrix perp = faces_[g].direction.orthogonal_complement().basis();
    for (auto h : faces_[g].subfaces) {
      RationalMatrix rows = faces_[h].direction.basis();
      rows.insert(rows.end(), perp.begin(), perp.end());
      auto ns = nullspace(rows, d);
      if (ns.size() != 1) throw Error("internal: relative facet normal is not unique");
      const auto& hv = faces_[h].vertices;
      const auto& gv = faces_[g].vertices;
      std::size_t outside = *std::find_if(gv.begin(), gv.end(),
                                          [&](std::size_t v) { return !std::binary_search(hv.begin(), hv.end(), v); });
      RationalVector normal = ns[0];
      if (sgn(dot(normal, vertices_[outside] - vertices_[hv[0]])) > 0) normal = -normal;
      relative_facets_[g].push_back(RelativeFacet{h, normal});
    }
  }
}

std::optional<std::size_t> Polytope::find_face(const std::vector<std::size_t>& sorted_vertices) const {
  auto it = face_index_.find(sorted_vertices);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Polytope::faces_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> Polytope::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 1), 0);
  for (const auto& face : faces_)
    if (face.dim >= 0) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

bool Polytope::face_contains(std::size_t big, std::size_t small) const {
  const auto& a = faces_[small].vertices;
  const auto& b = faces_[big].vertices;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RationalVector Polytope::relative_interior_point(std::size_t face) const {
  const auto& vs = faces_[face].vertices;
  if (vs.empty()) throw Error("empty face has no relative interior point");
  RationalVector q = zero_vector(ambient_);
  for (auto v : vs) q = q + vertices_[v];
  return Rational(1, static_cast<unsigned long>(vs.size())) * q;
}

namespace {

void check_pair(const Polytope& p, std::size_t face, std::size_t within) {
  if (face >= p.faces().size() || within >= p.faces().size()) throw Error("face index out of range");
  if (face == p.empty_face()) throw Error("cones at the empty face are undefined");
  if (!p.face_contains(within, face)) throw Error("face is not contained in the enclosing face");
}

void append_pm(RationalMatrix& gens, const RationalMatrix& basis) {
  for (const auto& b : basis) {
    gens.push_back(b);
    gens.push_back(-b);
  }
}

}  // namespace

Cone tangent_cone(const Polytope& p, std::size_t face, std::optional<std::size_t> within) {
  const std::size_t g = within.value_or(p.top());
  check_pair(p, face, g);
  const RationalVector q = p.relative_interior_point(face);
  RationalMatrix gens;
  for (auto v : p.face(g).vertices) {
    RationalVector dv = p.vertices()[v] - q;
    if (!is_zero(dv)) gens.push_back(dv);
  }
  append_pm(gens, p.face(g).direction.orthogonal_complement().basis());
  HalfspaceDescription h;
  std::set<RationalVector> normals;
  for (const auto& rf : p.relative_facets(g))
    if (p.face_contains(rf.facet, face)) normals.insert(primitive(-rf.normal));
  h.facets.assign(normals.begin(), normals.end());
  return Cone(gens, p.ambient_dim(), h);
}

Cone normal_cone(const Polytope& p, std::size_t face, std::optional<std::size_t> within) {
  const std::size_t g = within.value_or(p.top());
  check_pair(p, face, g);
  RationalMatrix gens;
  for (const auto& rf : p.relative_facets(g))
    if (p.face_contains(rf.facet, face)) gens.push_back(rf.normal);
  append_pm(gens, p.face(g).direction.orthogonal_complement().basis());
  return Cone(gens, p.ambient_dim());
}

Cone outer_cone(const Polytope& p, std::size_t face, std::optional<std::size_t> within) {
  const std::size_t g = within.value_or(p.top());
  check_pair(p, face, g);
  RationalMatrix gens;
  for (const auto& rf : p.relative_facets(g))
    if (p.face_contains(rf.facet, face)) gens.push_back(rf.normal);
  append_pm(gens, p.face(g).direction.orthogonal_complement().basis());
  append_pm(gens, p.face(face).direction.basis());
  return Cone(gens, p.ambient_dim());
}

Cone homogenize(const Polytope& p) {
  RationalMatrix gens;
  for (const auto& v : p.vertices()) {
    RationalVector w = v;
    w.emplace_back(1);
    gens.push_back(std::move(w));
  }
  return Cone(gens, p.ambient_dim() + 1);
}

}  // namespace anglekit
