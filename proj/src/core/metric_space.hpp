#pragma once

#include <string>
#include <vector>

#include "core/scalar.hpp"

namespace freelip {

using PointId = int;

// Finite pointed metric space: a point list, a distinguished base point and a
// dense symmetric distance matrix. Instances are immutable once built through
// validate_metric and safe to share across threads.
class PointedMetricSpace {
 public:
  // Empty placeholder; real spaces come out of validate_metric and friends.
  PointedMetricSpace() = default;

  int size() const { return n_; }
  PointId base() const { return base_; }
  NumMode mode() const { return mode_; }
  const Scalar& dist(PointId a, PointId b) const { return dist_[a * n_ + b]; }
  const std::string& name(PointId p) const { return names_[p]; }
  const std::vector<std::string>& names() const { return names_; }

  // Numerically identical space anchored at a different point. Distances are
  // shared; only the distinguished point moves.
  PointedMetricSpace rebased(PointId new_base) const;

 private:
  friend PointedMetricSpace validate_metric(
      const std::vector<std::vector<Scalar>>& dist, PointId base,
      std::vector<std::string> names);
  friend PointedMetricSpace scale_space(const PointedMetricSpace& m,
                                        const Scalar& s);

  int n_ = 0;
  PointId base_ = 0;
  NumMode mode_ = NumMode::Exact;
  std::vector<Scalar> dist_;  // row-major n*n
  std::vector<std::string> names_;
};

// Ordered list of distinct point ids of a host space.
struct Subset {
  std::vector<PointId> ids;

  bool contains(PointId p) const;
  static Subset all(const PointedMetricSpace& m);
  // Validates ids against the space: in range, no duplicates.
  static Subset checked(const PointedMetricSpace& m, std::vector<PointId> ids);
};

// Checks the metric axioms and builds the space. Errors carry the first
// violated axiom and its witnessing points: Asymmetric(a,b),
// NonzeroDiagonal(a), NonpositiveOffDiagonal(a,b), TriangleViolation(a,b,c).
// Float-mode checks use the kFloatTol tolerance; exact mode is strict.
PointedMetricSpace validate_metric(const std::vector<std::vector<Scalar>>& dist,
                                   PointId base,
                                   std::vector<std::string> names = {});

// Every distance multiplied by s > 0. Ratios and verdicts downstream are
// invariant under this map.
PointedMetricSpace scale_space(const PointedMetricSpace& m, const Scalar& s);

// Induced subspace on S. S must contain the base point.
PointedMetricSpace restrict_space(const PointedMetricSpace& m, const Subset& s);

// Glues the two spaces at their base points and extends the metric by
// d(x,y) = d(x,0) + d(0,y) across the parts. Points of t1 keep their indices;
// the non-base points of t2 follow.
PointedMetricSpace l1_sum(const PointedMetricSpace& t1,
                          const PointedMetricSpace& t2);

// Index in l1_sum(t1,t2) of point `p` of the given part (0 or 1).
PointId l1_sum_index(const PointedMetricSpace& t1,
                     const PointedMetricSpace& t2, int part, PointId p);

Scalar min_separation(const PointedMetricSpace& m);  // n >= 2
Scalar diameter(const PointedMetricSpace& m);

}  // namespace freelip
