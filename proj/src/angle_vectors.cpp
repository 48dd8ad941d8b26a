#include "anglekit/angle_vectors.hpp"

#include <cmath>

namespace anglekit {

namespace {

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

std::string set_string(RankSet s) {
  std::string out = "{";
  for (auto i : ranks_of(s)) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

int side_index(Side s) { return s == Side::interior ? 0 : 1; }

RankSet all_dims(std::size_t d) { return d == 0 ? 0 : (RankSet(1) << d) - 1; }

}  // namespace

std::string to_string(Side s) { return s == Side::interior ? "interior" : "exterior"; }

LinearForm& LinearForm::add(const LinearForm& other, double scale) {
  value += scale * other.value;
  if (gradient.size() < other.gradient.size()) gradient.resize(other.gradient.size(), 0.0);
  for (std::size_t i = 0; i < other.gradient.size(); ++i) gradient[i] += scale * other.gradient[i];
  return *this;
}

AngleTable::AngleTable(Polytope p, ConeAngleSpec spec, std::vector<Side> sides)
    : polytope_(std::move(p)), batch_(std::move(spec), polytope_.ambient_dim()) {
  if (polytope_.dim() != static_cast<int>(polytope_.ambient_dim()))
    throw Error("angle vectors need a full-dimensional polytope");
  const std::size_t n = polytope_.faces().size();
  for (Side side : sides) {
    auto& slots = slots_[side_index(side)];
    if (!slots.empty()) continue;
    slots.assign(n * n, kAbsent);
    for (std::size_t f = 1; f < n; ++f)
      for (std::size_t g = f; g < n; ++g) {
        if (!polytope_.face_contains(g, f)) continue;
        Cone c = side == Side::interior ? tangent_cone(polytope_, f, g) : outer_cone(polytope_, f, g);
        slots[f * n + g] = batch_.add(c);
      }
  }
}

void AngleTable::run(const SamplingConfig& sampling) {
  batch_.run(sampling.budget, sampling.seed, sampling.workers);
  sampling_ = sampling;
  ran_ = true;
}

void AngleTable::require_run() const {
  if (!ran_) throw Error("angle table has not been sampled yet");
}

std::size_t AngleTable::slot(Side side, std::size_t face, std::size_t within) const {
  const auto& slots = slots_[side_index(side)];
  const std::size_t n = polytope_.faces().size();
  if (slots.empty()) throw Error("angle table has no " + to_string(side) + " angles");
  if (face >= n || within >= n || slots[face * n + within] == kAbsent)
    throw Error("no angle for this face pair");
  return slots[face * n + within];
}

double AngleTable::angle(Side side, std::size_t face, std::size_t within) const {
  require_run();
  return batch_.value(slot(side, face, within));
}

LinearForm AngleTable::constant(double c) const { return LinearForm{c, std::vector<double>(batch_.size(), 0.0)}; }

LinearForm AngleTable::chain_sum(const std::vector<std::size_t>& dims, const std::vector<Side>& sides) const {
  require_run();
  if (dims.size() != sides.size()) throw Error("chain_sum needs one side per dimension");
  const std::size_t d = dim();
  for (std::size_t j = 0; j < dims.size(); ++j)
    if (dims[j] > d || (j > 0 && dims[j] < dims[j - 1])) throw Error("chain dimensions must be nondecreasing and <= d");
  const std::size_t k = dims.size();
  std::vector<std::vector<std::size_t>> level(k + 1);
  for (std::size_t j = 0; j < k; ++j) level[j] = polytope_.faces_of_dim(static_cast<int>(dims[j]));
  level[k] = {polytope_.top()};

  std::vector<std::vector<double>> fwd(k + 1), bwd(k + 1);
  fwd[0].assign(level[0].size(), 1.0);
  for (std::size_t j = 0; j < k; ++j) {
    fwd[j + 1].assign(level[j + 1].size(), 0.0);
    for (std::size_t b = 0; b < level[j + 1].size(); ++b)
      for (std::size_t a = 0; a < level[j].size(); ++a)
        if (polytope_.face_contains(level[j + 1][b], level[j][a]))
          fwd[j + 1][b] += fwd[j][a] * angle(sides[j], level[j][a], level[j + 1][b]);
  }
  bwd[k].assign(1, 1.0);
  for (std::size_t j = k; j-- > 0;) {
    bwd[j].assign(level[j].size(), 0.0);
    for (std::size_t a = 0; a < level[j].size(); ++a)
      for (std::size_t b = 0; b < level[j + 1].size(); ++b)
        if (polytope_.face_contains(level[j + 1][b], level[j][a]))
          bwd[j][a] += angle(sides[j], level[j][a], level[j + 1][b]) * bwd[j + 1][b];
  }
  LinearForm out = constant(fwd[k][0]);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t a = 0; a < level[j].size(); ++a)
      for (std::size_t b = 0; b < level[j + 1].size(); ++b)
        if (polytope_.face_contains(level[j + 1][b], level[j][a]))
          out.gradient[slot(sides[j], level[j][a], level[j + 1][b])] += fwd[j][a] * bwd[j + 1][b];
  return out;
}

LinearForm AngleTable::flag_form(Side side, RankSet dims) const {
  auto ds = ranks_of(dims);
  return chain_sum(ds, std::vector<Side>(ds.size(), side));
}

AngleVector angle_vector(const AngleTable& t, Side side) {
  AngleVector v{side, t.batch().spec().name(), {}, t.sampling()};
  for (std::size_t i = 0; i < t.dim(); ++i) v.entries.push_back(t.estimate(t.flag_form(side, RankSet(1) << i)));
  return v;
}

FlagAngleVector flag_angle_vector(const AngleTable& t, Side side) {
  FlagAngleVector v{side, t.batch().spec().name(), {}, t.sampling()};
  v.entries[0] = Estimate{1.0, 0.0, 0, true};
  for (RankSet s = 1; s <= all_dims(t.dim()); ++s) v.entries[s] = t.estimate(t.flag_form(side, s));
  return v;
}

std::vector<Estimate> spherical_intrinsic_volumes(const AngleTable& t) {
  std::vector<Estimate> out;
  for (std::size_t k = 0; k <= t.dim(); ++k)
    out.push_back(t.estimate(t.chain_sum({0, k}, {Side::interior, Side::exterior})));
  return out;
}

AngleVector angle_vector(const ConeAngleSpec& spec, const Polytope& p, Side side, const SamplingConfig& s) {
  AngleTable t(p, spec, {side});
  t.run(s);
  return angle_vector(t, side);
}

FlagAngleVector flag_angle_vector(const ConeAngleSpec& spec, const Polytope& p, Side side, const SamplingConfig& s) {
  AngleTable t(p, spec, {side});
  t.run(s);
  return flag_angle_vector(t, side);
}

std::vector<Estimate> spherical_intrinsic_volumes(const ConeAngleSpec& spec, const Polytope& p,
                                                  const SamplingConfig& s) {
  AngleTable t(p, spec);
  t.run(s);
  return spherical_intrinsic_volumes(t);
}

CheckReport check_gram(const AngleTable& t) {
  const std::size_t d = t.dim();
  LinearForm sum = t.constant(0.0);
  for (std::size_t i = 0; i < d; ++i) sum.add(t.flag_form(Side::interior, RankSet(1) << i), i % 2 ? -1.0 : 1.0);
  auto e = t.estimate(sum);
  CheckReport r{"alternating sum of interior angles equals (-1)^(d+1)", {}, {}};
  r.add(CheckResult::compare("alternating interior sum, d=" + std::to_string(d), e.value, d % 2 ? 1.0 : -1.0,
                             e.std_error));
  return r;
}

CheckReport check_exterior_normalization(const AngleTable& t) {
  auto e = t.estimate(t.flag_form(Side::exterior, 1));
  CheckReport r{"exterior vertex angles sum to 1", {}, {}};
  r.add(CheckResult::compare("exterior entry 0", e.value, 1.0, e.std_error));
  return r;
}

CheckReport check_flag_relations(const AngleTable& t) {
  const std::size_t d = t.dim();
  CheckReport r{"flag-angle relations: interior alternating sums and exterior insensitivity to dimension 0", {}, {}};
  const RankSet upper = all_dims(d) & ~RankSet(1);
  for (RankSet s = 0;; s = (s - upper) & upper) {
    const std::size_t tmin = s == 0 ? d : ranks_of(s).front();
    LinearForm lhs = t.constant(0.0);
    for (std::size_t i = 0; i < tmin; ++i) lhs.add(t.flag_form(Side::interior, s | (RankSet(1) << i)), i % 2 ? -1.0 : 1.0);
    LinearForm rhs = t.constant(0.0);
    rhs.add(t.flag_form(Side::interior, s), tmin % 2 ? 1.0 : -1.0);
    LinearForm diff = lhs;
    diff.add(rhs, -1.0);
    r.add(CheckResult::compare("interior S=" + set_string(s), lhs.value, rhs.value, t.estimate(diff).std_error));

    LinearForm with0 = t.flag_form(Side::exterior, s | 1), without = t.flag_form(Side::exterior, s);
    LinearForm ediff = with0;
    ediff.add(without, -1.0);
    r.add(CheckResult::compare("exterior S=" + set_string(s), with0.value, without.value, t.estimate(ediff).std_error));
    if (s == upper) break;
  }
  return r;
}

ZonotopeExpectations zonotope_expectations(const FlatLattice& lattice, std::size_t max_flag_size) {
  const PosetPtr& flats = lattice.poset;
  const std::size_t d = flats->rank();
  if (d != lattice.config.dim) throw Error("zonotope checks need a full-rank configuration");
  auto opposite = std::make_shared<const GradedPoset>(flats->dual());
  ZonotopeExpectations e;
  for (RankSet s = 1; s <= all_dims(d); ++s) {
    auto dims = ranks_of(s);
    if (dims.size() > max_flag_size) continue;
    e.exterior[s] = flag_whitney(flats, WhitneyKind::second, s);
    std::vector<std::size_t> complement;
    for (auto i : dims) complement.push_back(d - i);
    Rational w = flag_whitney(opposite, WhitneyKind::first, rank_set(complement));
    e.interior[s] = (d - dims.front()) % 2 ? Rational(-w) : w;
  }
  for (const auto& w : whitney(flats).first) e.intrinsic.push_back(abs(w));
  return e;
}

CheckReport check_zonotope_whitney(const AngleTable& t, const ZonotopeExpectations& e, std::size_t max_flag_size) {
  CheckReport r{"zonotope flag angles equal flag-Whitney numbers of the lattice of flats", {}, {}};
  for (Side side : {Side::exterior, Side::interior}) {
    const auto& expected = side == Side::exterior ? e.exterior : e.interior;
    for (const auto& [s, value] : expected) {
      if (ranks_of(s).size() > max_flag_size) continue;
      auto est = t.estimate(t.flag_form(side, s));
      r.add(CheckResult::compare(to_string(side) + " S=" + set_string(s), est.value, value.get_d(), est.std_error));
    }
  }
  return r;
}

CheckReport check_intrinsic_volumes(const AngleTable& t, const ZonotopeExpectations& e) {
  CheckReport r{"spherical intrinsic volumes of a zonotope equal |w_k| of its lattice of flats", {}, {}};
  auto v = spherical_intrinsic_volumes(t);
  for (std::size_t k = 0; k < v.size() && k < e.intrinsic.size(); ++k)
    r.add(CheckResult::compare("k=" + std::to_string(k), v[k].value, e.intrinsic[k].get_d(), v[k].std_error));
  return r;
}

CheckReport check_angle_independence(const std::vector<const AngleTable*>& tables) {
  if (tables.size() < 2) throw Error("independence check needs at least two angle specs");
  CheckReport r{"zonotope (flag-)angle vectors do not depend on the cone angle", {}, {}};
  const std::size_t d = tables[0]->dim();
  std::vector<FlagAngleVector> vecs[2];
  for (const auto* t : tables) {
    if (t->dim() != d) throw Error("independence check: dimension mismatch");
    vecs[0].push_back(flag_angle_vector(*t, Side::interior));
    vecs[1].push_back(flag_angle_vector(*t, Side::exterior));
  }
  for (int side = 0; side < 2; ++side)
    for (std::size_t a = 0; a < tables.size(); ++a)
      for (std::size_t b = a + 1; b < tables.size(); ++b)
        for (RankSet s = 1; s <= all_dims(d); ++s) {
          const auto& x = vecs[side][a].entries.at(s);
          const auto& y = vecs[side][b].entries.at(s);
          double sigma = std::hypot(x.std_error, y.std_error);
          r.add(CheckResult::compare(to_string(side ? Side::exterior : Side::interior) + " S=" + set_string(s) + " " +
                                         vecs[side][a].spec + " vs " + vecs[side][b].spec,
                                     x.value, y.value, sigma));
        }
  return r;
}

}  // namespace anglekit
