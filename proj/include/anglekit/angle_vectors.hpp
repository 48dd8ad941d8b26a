#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "anglekit/arrangement.hpp"
#include "anglekit/cone_angle.hpp"
#include "anglekit/flags.hpp"
#include "anglekit/polytope.hpp"
#include "anglekit/report.hpp"

namespace anglekit {

/// interior: angle of T_F G. exterior: angle of O_F G.
enum class Side { interior, exterior };
std::string to_string(Side s);

struct SamplingConfig {
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Value of an expression in the face-pair angles with its gradient by batch slot.
struct LinearForm {
  double value = 0.0;
  std::vector<double> gradient;
  LinearForm& add(const LinearForm& other, double scale = 1.0);
};

/// Angles alpha(F, G) for every pair of nonempty faces F <= G of a full-dimensional
/// polytope, all drawn from one sample stream.
class AngleTable {
 public:
  AngleTable(Polytope p, ConeAngleSpec spec, std::vector<Side> sides = {Side::interior, Side::exterior});

  void run(const SamplingConfig& sampling);
  bool ran() const { return ran_; }
  const Polytope& polytope() const { return polytope_; }
  const AngleBatch& batch() const { return batch_; }
  const SamplingConfig& sampling() const { return sampling_; }
  std::size_t dim() const { return polytope_.ambient_dim(); }

  std::size_t slot(Side side, std::size_t face, std::size_t within) const;
  double angle(Side side, std::size_t face, std::size_t within) const;

  LinearForm constant(double c) const;
  /// Sum over chains F_1 <= ... <= F_k <= P with dim F_j = dims[j] of the product of
  /// alpha_{sides[j]}(F_j, F_{j+1}), where F_{k+1} = P.
  LinearForm chain_sum(const std::vector<std::size_t>& dims, const std::vector<Side>& sides) const;
  /// Flag entry over face dimensions S (bit i = dimension i), one side throughout.
  LinearForm flag_form(Side side, RankSet dims) const;
  Estimate estimate(const LinearForm& f) const { return batch_.linearized(f.value, f.gradient); }

 private:
  void require_run() const;

  Polytope polytope_;
  AngleBatch batch_;
  SamplingConfig sampling_;
  bool ran_ = false;
  std::vector<std::size_t> slots_[2];  // n x n per side, npos where absent
};

struct AngleVector {
  Side side = Side::interior;
  std::string spec;
  std::vector<Estimate> entries;  // by face dimension 0..d-1
  SamplingConfig sampling;
};

struct FlagAngleVector {
  Side side = Side::interior;
  std::string spec;
  std::map<RankSet, Estimate> entries;  // every S within 0..d-1; the empty set maps to exactly 1
  SamplingConfig sampling;
};

AngleVector angle_vector(const AngleTable& t, Side side);
FlagAngleVector flag_angle_vector(const AngleTable& t, Side side);
/// Entry k: sum over vertices v and k-faces F containing v of interior(v, F) * exterior(F, P), k = 0..d.
std::vector<Estimate> spherical_intrinsic_volumes(const AngleTable& t);

AngleVector angle_vector(const ConeAngleSpec& spec, const Polytope& p, Side side, const SamplingConfig& s);
FlagAngleVector flag_angle_vector(const ConeAngleSpec& spec, const Polytope& p, Side side, const SamplingConfig& s);
std::vector<Estimate> spherical_intrinsic_volumes(const ConeAngleSpec& spec, const Polytope& p,
                                                  const SamplingConfig& s);

CheckReport check_gram(const AngleTable& t);
CheckReport check_exterior_normalization(const AngleTable& t);
/// Interior: sum_{i<t} (-1)^i a_{S+i} = (-1)^{t+1} a_S with t = min(S + {d}). Exterior: e_S = e_{S+0}.
CheckReport check_flag_relations(const AngleTable& t);

/// Exact counterparts of the zonotope flag-angle entries over face dimensions S.
struct ZonotopeExpectations {
  std::map<RankSet, Rational> exterior;    // W_S of the lattice of flats
  std::map<RankSet, Rational> interior;    // (-1)^{d - min S} w_{d - S} of the opposite lattice
  std::vector<Rational> intrinsic;         // |w_k| of the lattice of flats, k = 0..d
};
ZonotopeExpectations zonotope_expectations(const FlatLattice& lattice, std::size_t max_flag_size);

/// Angle entries with |S| <= max_flag_size against the exact lattice numbers.
CheckReport check_zonotope_whitney(const AngleTable& t, const ZonotopeExpectations& e, std::size_t max_flag_size);
CheckReport check_intrinsic_volumes(const AngleTable& t, const ZonotopeExpectations& e);
/// Pairwise agreement of both flag-angle vectors across tables built with different specs.
CheckReport check_angle_independence(const std::vector<const AngleTable*>& tables);

}  // namespace anglekit
