#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "anglekit/cone.hpp"

namespace anglekit {

/// Monte-Carlo or exact angle value with its standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  bool exact = false;
};

struct Box {
  std::vector<double> lo, hi;
  double volume() const;
  bool contains(const double* x) const;
};

enum class VolumeMode { co_estimated, analytic };

/// Union of axis-parallel boxes, used as the body K in vol(C cap K) / vol(K).
class BodyOracle {
 public:
  BodyOracle(std::vector<Box> boxes, VolumeMode mode = VolumeMode::co_estimated);
  std::size_t dim() const { return bounds_.lo.size(); }
  const std::vector<Box>& boxes() const { return boxes_; }
  const Box& bounding_box() const { return bounds_; }
  VolumeMode mode() const { return mode_; }
  bool contains(const double* x) const;
  /// Exact volume of the union (inclusion-exclusion over the boxes).
  double union_volume() const;
  /// Shifted L-shaped union of two boxes avoiding the origin.
  static BodyOracle shifted_l_shape(std::size_t d);

 private:
  std::vector<Box> boxes_;
  Box bounds_;
  VolumeMode mode_;
};

enum class AngleKind { standard, body, point_limit };

struct ConeAngleSpec {
  AngleKind kind = AngleKind::standard;
  std::optional<BodyOracle> body;
  std::optional<RationalVector> point;

  static ConeAngleSpec standard();
  static ConeAngleSpec with_body(BodyOracle body);
  static ConeAngleSpec with_point(RationalVector q);
  /// "standard", "body" (shifted L-shape) or "point_limit" (q = e_1) in dimension d.
  static ConeAngleSpec builtin(const std::string& name, std::size_t d);
  static ConeAngleSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  std::string name() const;
};

/// Angle of the cone when it is known without sampling.
std::optional<double> exact_angle(const ConeAngleSpec& spec, const Cone& c);

/// Point-limit reduction: either an exact value or the tangent cone at q.
struct PointLimitReduction {
  std::optional<double> exact;
  std::optional<Cone> tangent;
};
PointLimitReduction reduce_point_limit(const RationalVector& q, const Cone& c);

/// Angles of many cones estimated from one shared sample stream. Cones are
/// deduplicated; sampling is split into fixed batches with their own seeds, so
/// results do not depend on the number of workers.
class AngleBatch {
 public:
  AngleBatch(ConeAngleSpec spec, std::size_t dim);

  std::size_t add(const Cone& c);
  void run(std::uint64_t budget, std::uint64_t seed, unsigned workers = 1);

  std::size_t size() const { return slots_.size(); }
  std::size_t sampled_cones() const { return sampled_.size(); }
  double value(std::size_t slot) const;
  Estimate estimate(std::size_t slot) const;
  /// Delta-method estimate of a smooth expression with the given value and gradient
  /// (indexed by slot); exact slots carry no variance.
  Estimate linearized(double value, const std::vector<double>& gradient) const;
  std::uint64_t samples() const { return total_weight_samples_; }
  std::uint64_t discarded() const { return discarded_; }
  const ConeAngleSpec& spec() const { return spec_; }

 private:
  struct Slot {
    std::optional<double> exact;
    std::size_t sampled = 0;
  };
  struct Sampled {
    std::vector<std::pair<std::uint32_t, int>> constraints;  // normal index, required sign
  };
  std::size_t add_sampled(const Cone& c);

  ConeAngleSpec spec_;
  std::size_t dim_;
  std::vector<Slot> slots_;
  std::map<std::string, std::size_t> slot_by_key_;
  std::vector<Sampled> sampled_;
  std::map<RationalVector, std::uint32_t> normal_index_;
  std::vector<double> normals_;  // unit normals, dim_ per entry
  bool ran_ = false;
  std::size_t batches_ = 0;
  std::vector<std::uint32_t> counts_;  // batches_ x sampled_.size()
  std::vector<double> denominators_;   // per batch
  std::vector<double> estimates_;
  double total_denominator_ = 0.0;
  std::uint64_t total_weight_samples_ = 0;
  std::uint64_t discarded_ = 0;
};

/// One cone, one stream.
Estimate evaluate(const ConeAngleSpec& spec, const Cone& c, std::uint64_t budget, std::uint64_t seed,
                  unsigned workers = 1);

}  // namespace anglekit
