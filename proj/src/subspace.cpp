#include "anglekit/subspace.hpp"

namespace anglekit {

LinearSubspace::LinearSubspace(const RationalMatrix& spanning, std::size_t ambient_dim)
    : ambient_(ambient_dim) {
  for (const auto& v : spanning)
    if (v.size() != ambient_dim) throw Error("subspace vector has wrong dimension");
  for (auto i : independent_rows(spanning)) basis_.push_back(primitive(spanning[i]));
}

LinearSubspace LinearSubspace::whole(std::size_t d) {
  RationalMatrix e;
  for (std::size_t i = 0; i < d; ++i) e.push_back(unit_vector(d, i));
  return LinearSubspace(e, d);
}

bool LinearSubspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw Error("subspace membership: dimension mismatch");
  if (is_zero(v)) return true;
  RationalMatrix m = basis_;
  m.push_back(v);
  return rank(m) == basis_.size();
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) return false;
  if (other.dim() > dim()) return false;
  RationalMatrix m = basis_;
  m.insert(m.end(), other.basis_.begin(), other.basis_.end());
  return rank(m) == basis_.size();
}

bool LinearSubspace::operator==(const LinearSubspace& other) const {
  return dim() == other.dim() && contains(other);
}

LinearSubspace LinearSubspace::orthogonal_complement() const {
  if (basis_.empty()) return whole(ambient_);
  return LinearSubspace(nullspace(basis_, ambient_), ambient_);
}

LinearSubspace LinearSubspace::intersect(const LinearSubspace& other) const {
  auto a = orthogonal_complement().basis();
  auto b = other.orthogonal_complement().basis();
  a.insert(a.end(), b.begin(), b.end());
  if (a.empty()) return whole(ambient_);
  return LinearSubspace(nullspace(a, ambient_), ambient_);
}

LinearSubspace LinearSubspace::join(const LinearSubspace& other) const {
  RationalMatrix m = basis_;
  m.insert(m.end(), other.basis_.begin(), other.basis_.end());
  return LinearSubspace(m, ambient_);
}

}  // namespace anglekit
