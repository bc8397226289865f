#pragma once

#include <optional>
#include <vector>

#include "toric4/numeric.hpp"

namespace toric4 {

using LatticeVector = std::vector<Int>;

/// A cone is stored as its sorted set of ray indices; faces are implicit
/// (all fans here are simplicial, so every subset of a cone is a face).
struct Cone {
  std::vector<int> rays;

  bool operator==(const Cone&) const = default;
};

/// Finite simplicial fan in Z^rank. Rays are primitive; every ray belongs
/// to at least one maximal cone; maximal cones have linearly independent
/// rays. All values are immutable after construction and every operation
/// on them is pure, so concurrent use needs no synchronisation.
class Fan {
 public:
  Fan(int rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

  int rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  /// True iff the index set is contained in some maximal cone.
  bool spans_cone(const std::vector<int>& ray_indices) const;

  static Fan projective_space(int n);

 private:
  int rank_;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> max_cones_;
};

/// Fan of the P^s-bundle over P^d given by O + O(k_1) + ... + O(k_s),
/// twists nonincreasing and nonnegative. The P^s fibre fan sits in the
/// first s coordinates (rays e_1..e_s and -(e_1+..+e_s)); the base
/// directions are e_{s+1}..e_{s+d} together with the twisted ray
/// (k_1,..,k_s,-1,..,-1). Maximal cones omit one fibre ray and one base
/// ray, giving (s+1)(d+1) cones on (s+1)+(d+1) rays.
Fan make_kleinschmidt(int base_dim, int fiber_dim, const std::vector<Int>& twists);

/// Every maximal cone's rays extend to a Z-basis (determinant +-1 when
/// full-dimensional).
bool is_smooth(const Fan& fan);

/// Facet-pairing criterion: all maximal cones full-dimensional, every
/// facet shared by exactly two of them, adjacency graph connected.
bool is_complete(const Fan& fan);

/// Minimal non-faces: sets of rays spanning no cone, all of whose proper
/// subsets span cones. Exhaustive subset scan (ray counts here are <= 8).
std::vector<std::vector<int>> primitive_collections(const Fan& fan);

/// Minimal cone whose span contains v with nonnegative coordinates; the
/// face is cut out by the rays with strictly positive coefficient.
/// Empty result means v lies outside the support of the fan.
std::optional<Cone> cone_containing(const Fan& fan, const LatticeVector& v);

/// Interchange format {"rank": r, "rays": [[..],..], "max_cones": [[..],..]}
/// with 0-based ray indices.
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

}  // namespace toric4
