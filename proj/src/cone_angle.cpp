#include "anglekit/cone_angle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <thread>

namespace anglekit {

double Box::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= std::max(0.0, hi[i] - lo[i]);
  return v;
}

bool Box::contains(const double* x) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

BodyOracle::BodyOracle(std::vector<Box> boxes, VolumeMode mode) : boxes_(std::move(boxes)), mode_(mode) {
  if (boxes_.empty()) throw Error("body needs at least one box");
  const std::size_t d = boxes_[0].lo.size();
  bounds_ = boxes_[0];
  for (const auto& b : boxes_) {
    if (b.lo.size() != d || b.hi.size() != d) throw Error("box has wrong dimension");
    if (b.volume() <= 0.0) throw Error("box has zero volume");
    for (std::size_t i = 0; i < d; ++i) {
      bounds_.lo[i] = std::min(bounds_.lo[i], b.lo[i]);
      bounds_.hi[i] = std::max(bounds_.hi[i], b.hi[i]);
    }
  }
}

bool BodyOracle::contains(const double* x) const {
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(x); });
}

double BodyOracle::union_volume() const {
  const std::size_t n = boxes_.size(), d = dim();
  if (n > 20) throw Error("too many boxes for inclusion-exclusion");
  double total = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    Box meet{std::vector<double>(d, -INFINITY), std::vector<double>(d, INFINITY)};
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      for (std::size_t k = 0; k < d; ++k) {
        meet.lo[k] = std::max(meet.lo[k], boxes_[i].lo[k]);
        meet.hi[k] = std::min(meet.hi[k], boxes_[i].hi[k]);
      }
    }
    total += (count % 2 ? 1.0 : -1.0) * meet.volume();
  }
  return total;
}

BodyOracle BodyOracle::shifted_l_shape(std::size_t d) {
  if (d == 0) throw Error("body needs dimension at least 1");
  if (d == 1) return BodyOracle({Box{{0.25}, {1.5}}, Box{{-1.0}, {-0.5}}});
  Box a{std::vector<double>(d, -0.5), std::vector<double>(d, 1.0)};
  a.lo[0] = 0.25;
  a.hi[0] = 1.5;
  Box b{std::vector<double>(d, -0.5), std::vector<double>(d, 1.0)};
  b.lo[0] = -1.0;
  b.hi[0] = 0.5;
  b.lo[1] = 0.5;
  b.hi[1] = 1.5;
  return BodyOracle({a, b});
}

ConeAngleSpec ConeAngleSpec::standard() { return ConeAngleSpec{}; }

ConeAngleSpec ConeAngleSpec::with_body(BodyOracle body) {
  ConeAngleSpec s;
  s.kind = AngleKind::body;
  s.body = std::move(body);
  return s;
}

ConeAngleSpec ConeAngleSpec::with_point(RationalVector q) {
  if (is_zero(q)) throw Error("point-limit angle needs q != 0");
  ConeAngleSpec s;
  s.kind = AngleKind::point_limit;
  s.point = std::move(q);
  return s;
}

ConeAngleSpec ConeAngleSpec::builtin(const std::string& name, std::size_t d) {
  if (name == "standard") return standard();
  if (name == "body") return with_body(BodyOracle::shifted_l_shape(d));
  if (name == "point_limit" || name == "point-limit") return with_point(unit_vector(d, 0));
  throw Error("unknown angle: " + name);
}

namespace {

std::vector<double> json_doubles(const nlohmann::json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(x.is_string() ? parse_rational(x.get<std::string>()).get_d() : x.get<double>());
  return out;
}

}  // namespace

ConeAngleSpec ConeAngleSpec::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "standard") return standard();
  if (kind == "point_limit") {
    RationalVector q;
    for (const auto& x : j.at("q")) q.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    return with_point(q);
  }
  if (kind == "body") {
    const auto& b = j.at("body");
    std::vector<Box> boxes;
    for (const auto& box : b.at("boxes")) {
      if (box.is_object()) boxes.push_back(Box{json_doubles(box.at("lo")), json_doubles(box.at("hi"))});
      else boxes.push_back(Box{json_doubles(box.at(0)), json_doubles(box.at(1))});
    }
    VolumeMode mode = VolumeMode::co_estimated;
    if (b.contains("volume")) {
      const std::string v = b.at("volume").get<std::string>();
      if (v == "analytic") mode = VolumeMode::analytic;
      else if (v != "co_estimated") throw Error("unknown volume mode: " + v);
    }
    return with_body(BodyOracle(boxes, mode));
  }
  throw Error("unknown angle kind: " + kind);
}

nlohmann::json ConeAngleSpec::to_json() const {
  nlohmann::json j;
  j["kind"] = name();
  if (kind == AngleKind::point_limit) {
    j["q"] = nlohmann::json::array();
    for (const auto& x : *point) j["q"].push_back(x.get_str());
  }
  if (kind == AngleKind::body) {
    nlohmann::json boxes = nlohmann::json::array();
    for (const auto& b : body->boxes()) boxes.push_back({{"lo", b.lo}, {"hi", b.hi}});
    j["body"] = {{"boxes", boxes},
                 {"volume", body->mode() == VolumeMode::analytic ? "analytic" : "co_estimated"}};
  }
  return j;
}

std::string ConeAngleSpec::name() const {
  switch (kind) {
    case AngleKind::standard: return "standard";
    case AngleKind::body: return "body";
    case AngleKind::point_limit: return "point_limit";
  }
  return "unknown";
}

namespace {

std::optional<double> exact_standard(const Cone& c) {
  const std::size_t d = c.ambient_dim();
  if (!c.is_full_dimensional()) return 0.0;
  const auto& facets = c.description().facets;
  if (facets.empty()) return 1.0;
  if (facets.size() == 1) return 0.5;
  if (d == 2 && facets.size() == 2) {
    auto a = to_double(facets[0]);
    auto b = to_double(facets[1]);
    double between = std::atan2(std::abs(a[0] * b[1] - a[1] * b[0]), a[0] * b[0] + a[1] * b[1]);
    return (std::numbers::pi - between) / (2.0 * std::numbers::pi);
  }
  return std::nullopt;
}

}  // namespace

PointLimitReduction reduce_point_limit(const RationalVector& q, const Cone& c) {
  if (q.size() != c.ambient_dim()) throw Error("point-limit vector has wrong dimension");
  if (!c.is_full_dimensional()) return {0.0, std::nullopt};
  if (!c.contains(q)) return {0.0, std::nullopt};
  HalfspaceDescription tight;
  for (const auto& n : c.description().facets)
    if (sgn(dot(n, q)) == 0) tight.facets.push_back(n);
  if (tight.facets.empty()) return {1.0, std::nullopt};
  RationalMatrix gens = c.generators();
  gens.push_back(-q);
  return {std::nullopt, Cone(gens, c.ambient_dim(), tight)};
}

std::optional<double> exact_angle(const ConeAngleSpec& spec, const Cone& c) {
  switch (spec.kind) {
    case AngleKind::standard: return exact_standard(c);
    case AngleKind::body:
      if (!c.is_full_dimensional()) return 0.0;
      if (c.description().facets.empty()) return 1.0;
      return std::nullopt;
    case AngleKind::point_limit: {
      auto r = reduce_point_limit(*spec.point, c);
      if (r.exact) return r.exact;
      return exact_standard(*r.tangent);
    }
  }
  return std::nullopt;
}

AngleBatch::AngleBatch(ConeAngleSpec spec, std::size_t dim) : spec_(std::move(spec)), dim_(dim) {
  if (spec_.kind == AngleKind::body && spec_.body->dim() != dim_) throw Error("body has wrong dimension");
  if (spec_.kind == AngleKind::point_limit && spec_.point->size() != dim_) throw Error("point has wrong dimension");
}

std::size_t AngleBatch::add_sampled(const Cone& c) {
  Sampled s;
  for (const auto& n : c.description().facets) {
    bool flipped = false;
    auto dir = canonical_direction(n, &flipped);
    auto [it, fresh] = normal_index_.emplace(dir, static_cast<std::uint32_t>(normal_index_.size()));
    if (fresh) {
      auto v = to_double(dir);
      double len = 0.0;
      for (double x : v) len += x * x;
      len = std::sqrt(len);
      for (double x : v) normals_.push_back(x / len);
    }
    s.constraints.emplace_back(it->second, flipped ? -1 : 1);
  }
  sampled_.push_back(std::move(s));
  return sampled_.size() - 1;
}

std::size_t AngleBatch::add(const Cone& c) {
  if (ran_) throw Error("cannot add cones after sampling");
  if (c.ambient_dim() != dim_) throw Error("cone has wrong dimension");
  const Cone* target = &c;
  std::optional<Cone> reduced;
  std::optional<double> exact;
  if (spec_.kind == AngleKind::point_limit) {
    auto r = reduce_point_limit(*spec_.point, c);
    if (r.exact) exact = r.exact;
    else {
      reduced = std::move(r.tangent);
      target = &*reduced;
      exact = exact_standard(*target);
    }
  } else {
    exact = exact_angle(spec_, c);
  }
  std::string key;
  if (exact) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "exact:%a", *exact);
    key = buf;
  } else {
    key = target->canonical_key();
  }
  if (auto it = slot_by_key_.find(key); it != slot_by_key_.end()) return it->second;
  Slot slot;
  if (exact) slot.exact = exact;
  else slot.sampled = add_sampled(*target);
  slots_.push_back(slot);
  slot_by_key_[key] = slots_.size() - 1;
  return slots_.size() - 1;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void gaussian_fill(std::mt19937_64& rng, double* x, std::size_t d) {
  for (std::size_t i = 0; i < d; i += 2) {
    double u, v, s;
    do {
      u = 2.0 * uniform01(rng) - 1.0;
      v = 2.0 * uniform01(rng) - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    x[i] = u * f;
    if (i + 1 < d) x[i + 1] = v * f;
  }
}

constexpr double kBand = 1e-12;

}  // namespace

void AngleBatch::run(std::uint64_t budget, std::uint64_t seed, unsigned workers) {
  if (ran_) throw Error("batch already sampled");
  ran_ = true;
  const std::size_t S = sampled_.size();
  if (S == 0) return;
  if (budget < 2) throw Error("sample budget must be at least 2");
  batches_ = static_cast<std::size_t>(std::min<std::uint64_t>(256, budget));
  counts_.assign(batches_ * S, 0);
  denominators_.assign(batches_, 0.0);
  std::vector<std::uint64_t> discarded(batches_, 0);
  std::vector<std::uint64_t> in_body(batches_, 0);

  // Per cone: (word, bits that must be positive, bits that must be negative).
  struct Mask {
    std::uint32_t word;
    std::uint64_t pos, neg;
  };
  std::vector<std::uint32_t> offsets{0};
  std::vector<Mask> masks;
  for (const auto& s : sampled_) {
    std::map<std::uint32_t, Mask> by_word;
    for (auto [i, r] : s.constraints) {
      auto& m = by_word.try_emplace(i / 64, Mask{i / 64, 0, 0}).first->second;
      (r > 0 ? m.pos : m.neg) |= std::uint64_t(1) << (i % 64);
    }
    for (const auto& [w, m] : by_word) masks.push_back(m);
    offsets.push_back(static_cast<std::uint32_t>(masks.size()));
  }
  const std::size_t M = normals_.size() / dim_, d = dim_;
  const bool body = spec_.kind == AngleKind::body;
  const double volume_ratio = body ? spec_.body->union_volume() / spec_.body->bounding_box().volume() : 1.0;

  auto run_batch = [&](std::size_t b) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(b + 1)));
    const std::uint64_t n = budget / batches_ + (b < budget % batches_ ? 1 : 0);
    std::vector<double> x(d);
    std::vector<std::uint64_t> bits((M + 63) / 64);
    std::uint32_t* row = counts_.data() + b * S;
    const Box* box = body ? &spec_.body->bounding_box() : nullptr;
    std::uint64_t k = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
      for (;;) {
        double scale;
        if (body) {
          for (std::size_t i = 0; i < d; ++i) x[i] = box->lo[i] + (box->hi[i] - box->lo[i]) * uniform01(rng);
          if (!spec_.body->contains(x.data())) {
            scale = -1.0;
          } else {
            scale = kBand;
          }
        } else {
          gaussian_fill(rng, x.data(), d);
          double len = 0.0;
          for (double v : x) len += v * v;
          scale = kBand * std::sqrt(len);
        }
        if (scale < 0.0) break;  // outside the body: counts toward the draw only
        bool near = false;
        std::fill(bits.begin(), bits.end(), 0);
        for (std::size_t j = 0; j < M; ++j) {
          const double* nj = normals_.data() + j * d;
          double s = 0.0;
          for (std::size_t i = 0; i < d; ++i) s += nj[i] * x[i];
          if (std::abs(s) < scale) {
            near = true;
            break;
          }
          bits[j >> 6] |= std::uint64_t(s > 0) << (j & 63);
        }
        if (near) {
          ++discarded[b];
          continue;
        }
        ++k;
        for (std::size_t c = 0; c < S; ++c) {
          std::uint64_t miss = 0;
          for (std::uint32_t e = offsets[c]; e < offsets[c + 1]; ++e) {
            const Mask& m = masks[e];
            const std::uint64_t w = bits[m.word];
            miss |= (m.pos & ~w) | (m.neg & w);
          }
          row[c] += miss == 0;
        }
        break;
      }
    }
    in_body[b] = k;
    if (!body) denominators_[b] = static_cast<double>(n);
    else if (spec_.body->mode() == VolumeMode::co_estimated) denominators_[b] = static_cast<double>(k);
    else denominators_[b] = static_cast<double>(n) * volume_ratio;
  };

  const unsigned w = std::max(1u, workers);
  if (w == 1) {
    for (std::size_t b = 0; b < batches_; ++b) run_batch(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < w; ++t)
      pool.emplace_back([&] {
        for (std::size_t b; (b = next.fetch_add(1)) < batches_;) run_batch(b);
      });
    for (auto& th : pool) th.join();
  }

  total_denominator_ = 0.0;
  for (double v : denominators_) total_denominator_ += v;
  if (total_denominator_ <= 0.0) throw Error("no sample landed in the body");
  total_weight_samples_ = budget;
  discarded_ = 0;
  for (auto v : discarded) discarded_ += v;
  estimates_.assign(S, 0.0);
  for (std::size_t b = 0; b < batches_; ++b)
    for (std::size_t c = 0; c < S; ++c) estimates_[c] += counts_[b * S + c];
  for (auto& e : estimates_) e /= total_denominator_;
}

double AngleBatch::value(std::size_t slot) const {
  const auto& s = slots_.at(slot);
  if (s.exact) return *s.exact;
  if (!ran_) throw Error("batch has not been sampled");
  return estimates_[s.sampled];
}

Estimate AngleBatch::estimate(std::size_t slot) const {
  std::vector<double> g(slots_.size(), 0.0);
  g.at(slot) = 1.0;
  return linearized(value(slot), g);
}

Estimate AngleBatch::linearized(double value, const std::vector<double>& gradient) const {
  if (gradient.size() != slots_.size()) throw Error("gradient has wrong length");
  std::vector<double> g(sampled_.size(), 0.0);
  bool any = false;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (!slots_[i].exact && gradient[i] != 0.0) {
      g[slots_[i].sampled] += gradient[i];
      any = true;
    }
  Estimate e;
  e.value = value;
  if (!any) {
    e.exact = true;
    return e;
  }
  if (!ran_) throw Error("batch has not been sampled");
  const std::size_t S = sampled_.size();
  double sum_sq = 0.0;
  for (std::size_t b = 0; b < batches_; ++b) {
    double z = 0.0;
    for (std::size_t c = 0; c < S; ++c)
      if (g[c] != 0.0) z += g[c] * (counts_[b * S + c] - estimates_[c] * denominators_[b]);
    sum_sq += z * z;
  }
  const double B = static_cast<double>(batches_);
  e.std_error = B > 1 ? std::sqrt(B / (B - 1.0) * sum_sq) / total_denominator_ : INFINITY;
  e.samples = total_weight_samples_;
  return e;
}

Estimate evaluate(const ConeAngleSpec& spec, const Cone& c, std::uint64_t budget, std::uint64_t seed,
                  unsigned workers) {
  AngleBatch batch(spec, c.ambient_dim());
  auto slot = batch.add(c);
  batch.run(budget, seed, workers);
  return batch.estimate(slot);
}

}  // namespace anglekit
