#include "anglekit/combinatorial_checks.hpp"

#include "anglekit/polytope.hpp"

namespace anglekit {

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

std::string poly_string(const std::vector<Integer>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i].get_str();
  return s;
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

UniquenessMatrices uniqueness_matrices(std::size_t d, std::uint64_t seed) {
  if (d < 1 || d > 5) throw Error("uniqueness matrices support 1 <= d <= 5");
  UniquenessMatrices m;
  m.d = d;
  m.exterior.assign(d, RationalVector(d));
  m.binomial.assign(d, RationalVector(d));
  m.pascal.assign(d, RationalVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    auto lattice = flat_lattice(generic_configuration(d, d + j, seed + j));
    auto w = whitney(lattice.poset);
    for (std::size_t i = 0; i < d; ++i) {
      m.exterior[i][j] = w.second[i];
      m.binomial[i][j] = Rational(binomial(d + j, i));
      m.pascal[i][j] = Rational(binomial(i + j, j));
    }
    RationalVector row;
    for (const auto& c : cocharacteristic(lattice.poset)) row.push_back(Rational(c));
    m.cocharacteristic.push_back(std::move(row));
  }
  m.exterior_determinant = determinant(m.exterior);
  m.pascal_determinant = determinant(m.pascal);
  m.cocharacteristic_rank = rank(m.cocharacteristic);
  return m;
}

CheckReport uniqueness_report(std::size_t d, std::uint64_t seed) {
  auto m = uniqueness_matrices(d, seed);
  CheckReport r{"generic zonotopes give invertible Whitney and cocharacteristic matrices", {}, {}};
  const bool binomial_match = m.exterior == m.binomial;
  r.add(CheckResult::exact("W_i(Z_j) = C(d+j, i), d=" + std::to_string(d), binomial_match, 1, binomial_match));
  r.add(CheckResult::exact("det of the exterior matrix", m.exterior_determinant.get_d(), 1,
                           m.exterior_determinant == 1));
  r.add(CheckResult::exact("det of the Pascal matrix C(i+j, j)", m.pascal_determinant.get_d(), 1,
                           m.pascal_determinant == 1));
  r.add(CheckResult::exact("rank of the cocharacteristic coefficient matrix", static_cast<double>(m.cocharacteristic_rank),
                           static_cast<double>(d), m.cocharacteristic_rank == d));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.exterior) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& x : row) jr.push_back(x.get_str());
    rows.push_back(jr);
  }
  r.details["exterior_matrix"] = rows;
  return r;
}

CheckReport cocharacteristic_report(std::size_t max_d, std::size_t max_j, std::uint64_t seed) {
  CheckReport r{"cocharacteristic polynomials of generic zonotopes follow the binomial recursion", {}, {}};
  for (std::size_t d = 1; d <= max_d; ++d)
    for (std::size_t j = 0; j <= max_j; ++j) {
      auto lattice = flat_lattice(generic_configuration(d, d + j, seed + 31 * d + j));
      auto direct = cocharacteristic(lattice.poset);
      auto recursion = generic_cocharacteristic(d, j);
      const bool same = direct == recursion;
      auto c = CheckResult::exact("d=" + std::to_string(d) + " j=" + std::to_string(j) + ": " + poly_string(direct) +
                                      " vs " + poly_string(recursion),
                                  same, 1, same);
      r.add(c);
    }
  return r;
}

GeneratorConfiguration random_configuration(std::mt19937_64& rng, std::size_t max_d) {
  if (max_d < 2) throw Error("random configurations need max_d >= 2");
  for (;;) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_d)));
    const std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<long>(d), static_cast<long>(d + 3)));
    RationalMatrix gens;
    while (gens.size() < n) {
      RationalVector v(d);
      for (auto& x : v) x = uniform(rng, -2, 2);
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
    if (rank(gens) == d) return GeneratorConfiguration(gens, d);
  }
}

CheckReport greene_zaslavsky_report(std::size_t arrangements, std::size_t directions, std::size_t max_d,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckReport r{"vertices v of a zonotope with w in T_v Z number (-1)^d mu(0, 1) of the flats", {}, {}};
  nlohmann::json configs = nlohmann::json::array();
  for (std::size_t a = 0; a < arrangements; ++a) {
    auto cfg = random_configuration(rng, max_d);
    auto z = zonotope(cfg);
    auto lattice = flat_lattice(cfg);
    auto w = whitney(lattice.poset);
    const std::size_t d = cfg.dim;
    Rational mu = w.first[d];
    Rational expected = d % 2 ? Rational(-mu) : mu;
    std::size_t done = 0, agree = 0;
    while (done < directions) {
      RationalVector dir(d);
      for (auto& x : dir) x = uniform(rng, -1000, 1000);
      bool on_hyperplane = false;
      for (const auto& f : z.facets())
        if (sgn(dot(f.normal, dir)) == 0) on_hyperplane = true;
      if (on_hyperplane) continue;
      ++done;
      if (Rational(static_cast<long>(tangent_cone_vertex_count(z, dir))) == expected) ++agree;
    }
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : cfg.generators) {
      nlohmann::json v = nlohmann::json::array();
      for (const auto& x : g) v.push_back(x.get_str());
      gens.push_back(v);
    }
    configs.push_back({{"generators", gens}, {"vertices", z.faces_of_dim(0).size()}});
    r.add(CheckResult::exact("arrangement " + std::to_string(a) + " (d=" + std::to_string(d) + ", n=" +
                                 std::to_string(cfg.size()) + "): " + std::to_string(agree) + "/" +
                                 std::to_string(directions) + " directions",
                             expected.get_d(), expected.get_d(), agree == directions));
  }
  r.details["arrangements"] = configs;
  return r;
}

GradedPoset random_graded_poset(std::mt19937_64& rng, std::size_t rank, std::size_t max_width) {
  if (rank < 1) throw Error("random posets need rank >= 1");
  std::vector<std::vector<std::size_t>> levels{{0}};
  std::size_t n = 1;
  for (std::size_t k = 1; k < rank; ++k) {
    std::size_t width = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_width)));
    levels.emplace_back();
    for (std::size_t i = 0; i < width; ++i) levels.back().push_back(n++);
  }
  levels.push_back({n++});
  std::vector<GradedPoset::Cover> covers;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const auto& below = levels[k - 1];
    std::vector<bool> covered(below.size(), false);
    for (auto y : levels[k]) {
      bool any = false;
      for (std::size_t x = 0; x < below.size(); ++x)
        if (rng() % 2 == 0) {
          covers.emplace_back(below[x], y);
          covered[x] = any = true;
        }
      if (!any) {
        std::size_t x = rng() % below.size();
        covers.emplace_back(below[x], y);
        covered[x] = true;
      }
    }
    for (std::size_t x = 0; x < below.size(); ++x)
      if (!covered[x]) covers.emplace_back(below[x], levels[k][rng() % levels[k].size()]);
  }
  return GradedPoset(n, covers);
}

IncidenceFunction<Rational> random_unipotent(std::mt19937_64& rng, const PosetPtr& p) {
  IncidenceFunction<Rational> g(p);
  for (std::size_t a = 0; a < p->size(); ++a)
    for (std::size_t b = 0; b < p->size(); ++b) {
      if (!p->leq(a, b)) continue;
      if (a == b) {
        g.set(a, b, 1);
        continue;
      }
      Rational v(uniform(rng, -5, 5), uniform(rng, 1, 4));
      v.canonicalize();
      g.set(a, b, v);
    }
  return g;
}

CheckReport reciprocity_report(std::size_t functions, std::size_t max_rank, std::uint64_t seed, ChainConvention c) {
  if (max_rank < 2) throw Error("reciprocity needs max_rank >= 2");
  std::mt19937_64 rng(seed);
  const bool closed = c == ChainConvention::closed;
  CheckReport r{closed ? "F_g(1/z) = -F_{g^-1}(z) with the closing factor g(b_k, 1)"
                       : "F_g(1/z) = F_{g^-1}(z) over open chains",
                {}, {}};
  std::size_t holds = 0;
  nlohmann::json first_failure;
  for (std::size_t i = 0; i < functions; ++i) {
    auto p = std::make_shared<const GradedPoset>(
        random_graded_poset(rng, static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_rank)))));
    auto g = random_unipotent(rng, p);
    auto o = reciprocity_check(g, c);
    if (o.holds) {
      ++holds;
    } else if (first_failure.is_null()) {
      nlohmann::json chain = nlohmann::json::array();
      for (auto x : o.mismatch) chain.push_back(x);
      first_failure = {{"function", i},
                       {"poset_size", p->size()},
                       {"poset_rank", p->rank()},
                       {"chain", chain},
                       {"transformed", o.transformed.get_str()},
                       {"expected", o.expected.get_str()}};
    }
  }
  r.add(CheckResult::exact(std::to_string(holds) + "/" + std::to_string(functions) + " random unipotent functions",
                           static_cast<double>(holds), static_cast<double>(functions), holds == functions));
  if (!first_failure.is_null()) r.details["first_failure"] = first_failure;
  return r;
}

CheckReport first_kind_report(const std::vector<std::pair<std::string, PosetPtr>>& posets) {
  CheckReport r{"first-kind flag numbers follow from chain counts by reciprocity", {}, {}};
  for (const auto& [name, p] : posets) {
    auto second = flag_whitney_vector(p, WhitneyKind::second);
    auto derived = first_kind_from_second(second, p->rank());
    auto direct = flag_whitney_vector(p, WhitneyKind::first);
    const bool same = derived == direct;
    r.add(CheckResult::exact(name + " (" + std::to_string(direct.size()) + " rank sets)", same, 1, same));
  }
  return r;
}

}  // namespace anglekit
