#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <type_traits>

#include "anglekit/poset.hpp"

namespace anglekit {

using PosetPtr = std::shared_ptr<const GradedPoset>;

/// f(a, b) for a <= b in a fixed poset; entries off the order relation stay zero.
template <class T>
class IncidenceFunction {
 public:
  explicit IncidenceFunction(PosetPtr poset)
      : poset_(std::move(poset)), n_(poset_->size()), values_(n_ * n_, T(0)) {}

  const GradedPoset& poset() const { return *poset_; }
  const PosetPtr& host() const { return poset_; }
  std::size_t size() const { return n_; }

  const T& operator()(std::size_t a, std::size_t b) const { return values_[a * n_ + b]; }
  void set(std::size_t a, std::size_t b, T value) {
    if (!poset_->leq(a, b)) throw Error("incidence functions vanish off the order relation");
    values_[a * n_ + b] = std::move(value);
  }

  bool is_unipotent() const {
    for (std::size_t a = 0; a < n_; ++a)
      if ((*this)(a, a) != T(1)) return false;
    return true;
  }

  IncidenceFunction& operator+=(const IncidenceFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  IncidenceFunction& operator-=(const IncidenceFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  IncidenceFunction& operator*=(const T& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  bool operator==(const IncidenceFunction& o) const { return poset_ == o.poset_ && values_ == o.values_; }

  void check_same(const IncidenceFunction& o) const {
    if (poset_ != o.poset_) throw Error("incidence functions live on different posets");
  }

 private:
  PosetPtr poset_;
  std::size_t n_;
  std::vector<T> values_;
};

template <class T>
IncidenceFunction<T> delta(const PosetPtr& p) {
  IncidenceFunction<T> f(p);
  for (std::size_t a = 0; a < p->size(); ++a) f.set(a, a, T(1));
  return f;
}

template <class T>
IncidenceFunction<T> zeta(const PosetPtr& p) {
  IncidenceFunction<T> f(p);
  for (std::size_t a = 0; a < p->size(); ++a)
    for (std::size_t b = 0; b < p->size(); ++b)
      if (p->leq(a, b)) f.set(a, b, T(1));
  return f;
}

namespace detail {

/// Elements above a, sorted by rank.
inline std::vector<std::size_t> up_set(const GradedPoset& p, std::size_t a) {
  std::vector<std::size_t> out;
  for (std::size_t k = p.rank(a); k <= p.rank(); ++k)
    for (auto x : p.elements_of_rank(k))
      if (p.leq(a, x)) out.push_back(x);
  return out;
}

}  // namespace detail

/// Inverse of a unipotent function by the recursion g^{-1} * g = delta.
template <class T>
IncidenceFunction<T> inverse(const IncidenceFunction<T>& g) {
  if (!g.is_unipotent()) throw Error("only unipotent incidence functions are inverted");
  const auto& p = g.poset();
  IncidenceFunction<T> h(g.host());
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto up = detail::up_set(p, a);
    h.set(a, a, T(1));
    for (std::size_t j = 1; j < up.size(); ++j) {
      std::size_t c = up[j];
      T s(0);
      for (std::size_t i = 0; i < j; ++i)
        if (p.less(up[i], c)) s += h(a, up[i]) * g(up[i], c);
      h.set(a, c, -s);
    }
  }
  return h;
}

template <class T>
IncidenceFunction<T> moebius(const PosetPtr& p) {
  return inverse(zeta<T>(p));
}

template <class T>
IncidenceFunction<T> convolve(const IncidenceFunction<T>& g, const IncidenceFunction<T>& h) {
  g.check_same(h);
  const auto& p = g.poset();
  IncidenceFunction<T> out(g.host());
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto up = detail::up_set(p, a);
    for (auto c : up) {
      T s(0);
      for (auto b : up)
        if (p.leq(b, c)) s += g(a, b) * h(b, c);
      out.set(a, c, s);
    }
  }
  return out;
}

/// (g *_k h)(a, c) = sum over b of rank k with a <= b <= c of g(a, b) h(b, c).
template <class T>
IncidenceFunction<T> convolve_at_rank(const IncidenceFunction<T>& g, const IncidenceFunction<T>& h, std::size_t k) {
  g.check_same(h);
  const auto& p = g.poset();
  IncidenceFunction<T> out(g.host());
  const auto& level = p.elements_of_rank(k);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (!p.leq(a, c)) continue;
      T s(0);
      for (auto b : level)
        if (p.leq(a, b) && p.leq(b, c)) s += g(a, b) * h(b, c);
      out.set(a, c, s);
    }
  return out;
}

/// Order-preserving surjection between graded posets, as an element map.
struct PosetMap {
  PosetPtr source, target;
  std::vector<std::size_t> image;

  void validate() const {
    if (image.size() != source->size()) throw Error("poset map has wrong domain size");
    std::vector<bool> hit(target->size(), false);
    for (auto q : image) {
      if (q >= target->size()) throw Error("poset map leaves the target");
      hit[q] = true;
    }
    for (bool h : hit)
      if (!h) throw Error("poset map is not surjective");
    for (std::size_t a = 0; a < source->size(); ++a)
      for (std::size_t b = 0; b < source->size(); ++b)
        if (source->leq(a, b) && !target->leq(image[a], image[b])) throw Error("poset map is not order preserving");
  }
  bool is_rank_preserving() const {
    for (std::size_t a = 0; a < source->size(); ++a)
      if (source->rank(a) != target->rank(image[a])) return false;
    return true;
  }
  std::vector<std::vector<std::size_t>> fibers() const {
    std::vector<std::vector<std::size_t>> f(target->size());
    for (std::size_t a = 0; a < image.size(); ++a) f[image[a]].push_back(a);
    return f;
  }
};

struct FiberViolation {
  std::size_t q, q_prime, p_prime_1, p_prime_2;
  double difference;
};

namespace detail {

template <class T>
double as_double(const T& x) {
  if constexpr (std::is_same_v<T, double>) return x;
  else return x.get_d();
}

}  // namespace detail

/// First violation of: the fiber sum over p in phi^{-1}(q) of h(p, p') is
/// independent of p' in phi^{-1}(q'). Exact for rationals, within tol for doubles.
template <class T>
std::optional<FiberViolation> fiber_condition_violation(const IncidenceFunction<T>& h, const PosetMap& phi,
                                                        double tol = 0.0) {
  if (h.host() != phi.source) throw Error("incidence function is not on the map's source");
  auto fib = phi.fibers();
  const auto& tgt = *phi.target;
  for (std::size_t q = 0; q < tgt.size(); ++q)
    for (std::size_t qp = 0; qp < tgt.size(); ++qp) {
      if (!tgt.leq(q, qp)) continue;
      std::optional<T> first;
      std::size_t first_p = 0;
      for (auto pp : fib[qp]) {
        T s(0);
        for (auto p : fib[q]) s += h(p, pp);
        if (!first) {
          first = s;
          first_p = pp;
          continue;
        }
        double diff = std::abs(detail::as_double(T(s - *first)));
        bool bad = std::is_same_v<T, double> ? diff > tol : s != *first;
        if (bad) return FiberViolation{q, qp, first_p, pp, diff};
      }
    }
  return std::nullopt;
}

/// phi_* h (q, q') = (1 / |phi^{-1}(q')|) * sum of h(p, p') over both fibers.
template <class T>
IncidenceFunction<T> pushforward(const IncidenceFunction<T>& h, const PosetMap& phi) {
  if (h.host() != phi.source) throw Error("incidence function is not on the map's source");
  auto fib = phi.fibers();
  IncidenceFunction<T> out(phi.target);
  const auto& tgt = *phi.target;
  for (std::size_t q = 0; q < tgt.size(); ++q)
    for (std::size_t qp = 0; qp < tgt.size(); ++qp) {
      if (!tgt.leq(q, qp)) continue;
      T s(0);
      for (auto p : fib[q])
        for (auto pp : fib[qp]) s += h(p, pp);
      out.set(q, qp, s / T(static_cast<long>(fib[qp].size())));
    }
  return out;
}

/// Pushforward that refuses inputs violating the fiber condition.
template <class T>
IncidenceFunction<T> pushforward_checked(const IncidenceFunction<T>& h, const PosetMap& phi, double tol = 0.0) {
  if (auto v = fiber_condition_violation(h, phi, tol))
    throw Error("fiber condition violated at q=" + std::to_string(v->q) + " q'=" + std::to_string(v->q_prime) +
                " between p'=" + std::to_string(v->p_prime_1) + " and p'=" + std::to_string(v->p_prime_2));
  return pushforward(h, phi);
}

/// phi^* g (p, p') = g(phi p, phi p') for p <= p'.
template <class T>
IncidenceFunction<T> pullback(const IncidenceFunction<T>& g, const PosetMap& phi) {
  if (g.host() != phi.target) throw Error("incidence function is not on the map's target");
  IncidenceFunction<T> out(phi.source);
  const auto& src = *phi.source;
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b)
      if (src.leq(a, b)) out.set(a, b, g(phi.image[a], phi.image[b]));
  return out;
}

}  // namespace anglekit
