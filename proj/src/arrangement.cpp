#include "anglekit/arrangement.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "anglekit/lp.hpp"

namespace anglekit {

GeneratorConfiguration::GeneratorConfiguration(RationalMatrix gens, std::size_t d)
    : generators(std::move(gens)), dim(d) {
  if (generators.empty()) throw Error("configuration needs at least one generator");
  for (const auto& z : generators) {
    if (z.size() != dim) throw Error("generator has wrong dimension");
    if (is_zero(z)) throw Error("zero generator");
  }
}

std::size_t GeneratorConfiguration::rank() const { return anglekit::rank(generators); }

std::vector<int> sign_vector(const GeneratorConfiguration& cfg, const RationalVector& p) {
  std::vector<int> s;
  for (const auto& z : cfg.generators) s.push_back(sgn(dot(z, p)));
  return s;
}

std::vector<Covector> covectors(const GeneratorConfiguration& cfg) {
  std::vector<Covector> current{Covector{{}, zero_vector(cfg.dim)}};
  RationalMatrix prefix;
  for (const auto& z : cfg.generators) {
    prefix.push_back(z);
    std::vector<Covector> next;
    for (const auto& c : current) {
      const int natural = sgn(dot(z, c.witness));
      for (int s : {-1, 0, 1}) {
        std::vector<int> signs = c.signs;
        signs.push_back(s);
        if (s == natural) {
          next.push_back(Covector{signs, c.witness});
        } else if (auto w = sign_witness(prefix, signs)) {
          next.push_back(Covector{signs, *w});
        }
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

Polytope zonotope(const GeneratorConfiguration& cfg) {
  const std::size_t d = cfg.dim, r = cfg.rank();
  const RationalMatrix perp = LinearSubspace(cfg.generators, d).orthogonal_complement().basis();
  RationalMatrix vertices;
  std::vector<Facet> facets;
  for (const auto& c : covectors(cfg)) {
    RationalMatrix zero_part;
    for (std::size_t i = 0; i < c.signs.size(); ++i)
      if (c.signs[i] == 0) zero_part.push_back(cfg.generators[i]);
    if (zero_part.empty()) {
      RationalVector v = zero_vector(d);
      for (std::size_t i = 0; i < c.signs.size(); ++i) v = v + Rational(c.signs[i]) * cfg.generators[i];
      vertices.push_back(std::move(v));
      continue;
    }
    if (rank(zero_part) + 1 != r) continue;
    RationalMatrix rows = zero_part;
    rows.insert(rows.end(), perp.begin(), perp.end());
    auto ns = nullspace(rows, d);
    if (ns.size() != 1) throw Error("internal: zonotope facet normal is not unique");
    RationalVector n = ns[0];
    for (std::size_t i = 0; i < c.signs.size(); ++i) {
      if (c.signs[i] == 0) continue;
      if (sgn(dot(n, cfg.generators[i])) != c.signs[i]) n = -n;
      break;
    }
    facets.push_back(Facet{n, 0, {}});
  }
  for (auto& f : facets) {
    f.offset = dot(f.normal, vertices[0]);
    for (const auto& v : vertices) f.offset = std::max(f.offset, dot(f.normal, v));
  }
  return Polytope(vertices, facets);
}

namespace {

std::vector<std::size_t> closure(const GeneratorConfiguration& cfg, const std::vector<std::size_t>& set,
                                 std::size_t set_rank) {
  RationalMatrix base;
  for (auto i : set) base.push_back(cfg.generators[i]);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    if (std::binary_search(set.begin(), set.end(), j)) {
      out.push_back(j);
      continue;
    }
    RationalMatrix m = base;
    m.push_back(cfg.generators[j]);
    if (rank(m) == set_rank) out.push_back(j);
  }
  return out;
}

}  // namespace

FlatLattice flat_lattice(const GeneratorConfiguration& cfg, FlatOrientation orientation) {
  FlatLattice out;
  out.config = cfg;
  out.orientation = orientation;
  const std::size_t d = cfg.dim;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> ranks;
  std::set<GradedPoset::Cover> covers;

  if (orientation == FlatOrientation::inclusion) {
    auto bottom = closure(cfg, {}, 0);
    index[bottom] = 0;
    out.flats.push_back(bottom);
    ranks.push_back(0);
    for (std::size_t k = 0; k < out.flats.size(); ++k) {
      const auto flat = out.flats[k];
      for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (std::binary_search(flat.begin(), flat.end(), i)) continue;
        auto grown = flat;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), i), i);
        auto cl = closure(cfg, grown, ranks[k] + 1);
        auto [it, fresh] = index.emplace(cl, out.flats.size());
        if (fresh) {
          out.flats.push_back(cl);
          ranks.push_back(ranks[k] + 1);
        }
        covers.emplace(k, it->second);
      }
    }
    for (const auto& f : out.flats) {
      RationalMatrix span;
      for (auto i : f) span.push_back(cfg.generators[i]);
      out.subspaces.emplace_back(span, d);
    }
  } else {
    // Intersections of hyperplanes, starting from the whole space.
    std::vector<LinearSubspace> normals;
    for (const auto& z : cfg.generators) normals.emplace_back(RationalMatrix{z}, d);
    auto on = [&](const LinearSubspace& x) {
      std::vector<std::size_t> s;
      auto perp = x.orthogonal_complement();
      for (std::size_t i = 0; i < cfg.size(); ++i)
        if (perp.contains(cfg.generators[i])) s.push_back(i);
      return s;
    };
    auto whole = LinearSubspace::whole(d);
    out.subspaces.push_back(whole);
    out.flats.push_back(on(whole));
    index[out.flats[0]] = 0;
    for (std::size_t k = 0; k < out.subspaces.size(); ++k) {
      const auto x = out.subspaces[k];
      for (std::size_t i = 0; i < cfg.size(); ++i) {
        auto hyper = normals[i].orthogonal_complement();
        if (hyper.contains(x)) continue;
        auto y = x.intersect(hyper);
        auto s = on(y);
        auto [it, fresh] = index.emplace(s, out.flats.size());
        if (fresh) {
          out.flats.push_back(s);
          out.subspaces.push_back(y);
        }
        covers.emplace(k, it->second);
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& f : out.flats) {
    std::string l = "{";
    for (std::size_t i = 0; i < f.size(); ++i) l += (i ? "," : "") + std::to_string(f[i]);
    labels.push_back(l + "}");
  }
  out.poset = std::make_shared<GradedPoset>(out.flats.size(),
                                            std::vector<GradedPoset::Cover>(covers.begin(), covers.end()), labels);
  return out;
}

WhitneyNumbers whitney(const PosetPtr& lattice) {
  WhitneyNumbers w;
  const auto& p = *lattice;
  w.first.assign(p.rank() + 1, Rational(0));
  w.second.assign(p.rank() + 1, Rational(0));
  auto m = moebius<Rational>(lattice);
  for (std::size_t x = 0; x < p.size(); ++x) {
    w.first[p.rank(x)] += m(p.bottom(), x);
    w.second[p.rank(x)] += 1;
  }
  return w;
}

namespace {

/// mu(x, top) for every x.
std::vector<Integer> moebius_to_top(const GradedPoset& p) {
  std::vector<Integer> mu(p.size(), 0);
  mu[p.top()] = 1;
  for (std::size_t k = p.rank(); k-- > 0;)
    for (auto x : p.elements_of_rank(k)) {
      Integer s = 0;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.less(x, y)) s += mu[y];
      mu[x] = -s;
    }
  return mu;
}

}  // namespace

std::vector<Integer> cocharacteristic(const PosetPtr& lattice) {
  const auto& p = *lattice;
  std::vector<Integer> coeff(p.rank() + 1, 0);
  auto mu = moebius_to_top(p);
  for (std::size_t x = 0; x < p.size(); ++x) coeff[p.rank() - p.rank(x)] += abs(mu[x]);
  return coeff;
}

std::vector<Integer> characteristic(const PosetPtr& lattice) {
  const auto& p = *lattice;
  std::vector<Integer> coeff(p.rank() + 1, 0);
  auto m = moebius<Rational>(lattice);
  for (std::size_t x = 0; x < p.size(); ++x) coeff[p.rank() - p.rank(x)] += m(p.bottom(), x).get_num();
  return coeff;
}

std::vector<Integer> generic_cocharacteristic(std::size_t d, std::size_t j) {
  std::vector<Integer> psi{1};
  for (std::size_t k = 1; k <= d; ++k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), k - 1 + j, j);
    // c * t * (t + 1)^{k-1}
    psi.resize(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), k - 1, i);
      psi[i + 1] += c * b;
    }
  }
  return psi;
}

bool is_generic(const GeneratorConfiguration& cfg) {
  const std::size_t n = cfg.size(), k = std::min(cfg.dim, n);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    RationalMatrix m;
    for (auto i : idx) m.push_back(cfg.generators[i]);
    if (rank(m) != k) return false;
    std::size_t i = k;
    while (i-- > 0 && idx[i] == n - k + i) {
    }
    if (i == std::size_t(-1)) return true;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

GeneratorConfiguration generic_configuration(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d == 0 || n == 0) throw Error("generic configuration needs d, n >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RationalMatrix gens(n, zero_vector(d));
    for (auto& z : gens)
      for (auto& x : z) x = static_cast<long>(rng() % 11) - 5;
    if (std::any_of(gens.begin(), gens.end(), [](const RationalVector& z) { return is_zero(z); })) continue;
    GeneratorConfiguration cfg(gens, d);
    if (is_generic(cfg)) return cfg;
  }
  throw Error("could not draw a generic configuration");
}

bool is_belt_polytope(const Polytope& p) {
  for (auto two : p.faces_of_dim(2)) {
    const auto& edges = p.face(two).subfaces;
    const std::size_t m = edges.size();
    if (m % 2) return false;
    // Walk the boundary cycle.
    std::vector<std::size_t> order{edges[0]};
    std::vector<bool> used(m, false);
    used[0] = true;
    std::size_t at = p.face(edges[0]).vertices[1];
    while (order.size() < m) {
      bool moved = false;
      for (std::size_t e = 0; e < m; ++e) {
        if (used[e]) continue;
        const auto& vs = p.face(edges[e]).vertices;
        if (vs[0] != at && vs[1] != at) continue;
        used[e] = true;
        order.push_back(edges[e]);
        at = vs[0] == at ? vs[1] : vs[0];
        moved = true;
        break;
      }
      if (!moved) return false;
    }
    for (std::size_t i = 0; i < m / 2; ++i) {
      if (!(p.face(order[i]).direction == p.face(order[i + m / 2]).direction)) return false;
    }
  }
  return true;
}

PolytopeFlats polytope_flats(const Polytope& p) {
  PolytopeFlats out;
  out.face_to_flat.assign(p.faces().size(), 0);
  for (std::size_t f = 1; f < p.faces().size(); ++f) {
    const auto& dir = p.face(f).direction;
    std::size_t k = 0;
    while (k < out.flats.size() && !(out.flats[k] == dir)) ++k;
    if (k == out.flats.size()) out.flats.push_back(dir);
    out.face_to_flat[f] = k;
  }
  const std::size_t n = out.flats.size();
  std::vector<GradedPoset::Cover> covers;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || out.flats[b].dim() <= out.flats[a].dim() || !out.flats[b].contains(out.flats[a])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && out.flats[c].dim() > out.flats[a].dim() && out.flats[c].dim() < out.flats[b].dim() &&
            out.flats[c].contains(out.flats[a]) && out.flats[b].contains(out.flats[c]))
          cover = false;
      if (cover) covers.emplace_back(a, b);
    }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("L" + std::to_string(k));
  out.poset = std::make_shared<GradedPoset>(n, covers, labels);
  return out;
}

PosetMap face_to_flat_map(const Polytope& p, const PolytopeFlats& flats, PosetPtr face_lattice, PosetPtr flats0) {
  PosetMap map{std::move(face_lattice), std::move(flats0), {}};
  map.image.assign(p.faces().size(), 0);
  for (std::size_t f = 1; f < p.faces().size(); ++f) map.image[f] = flats.face_to_flat[f] + 1;
  map.validate();
  return map;
}

std::size_t tangent_cone_vertex_count(const Polytope& z, const RationalVector& w) {
  std::vector<int> side;
  for (const auto& f : z.facets()) {
    int s = sgn(dot(f.normal, w));
    if (s == 0) throw Error("direction lies on a facet hyperplane");
    side.push_back(s);
  }
  std::size_t count = 0;
  for (std::size_t v = 0; v < z.vertices().size(); ++v) {
    bool inside = true;
    for (std::size_t h = 0; h < z.facets().size() && inside; ++h)
      if (side[h] > 0 && std::binary_search(z.facets()[h].vertices.begin(), z.facets()[h].vertices.end(), v))
        inside = false;
    count += inside;
  }
  return count;
}

}  // namespace anglekit
