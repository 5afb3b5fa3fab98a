#pragma once

#include <map>

#include "core/metric_space.hpp"

namespace freelip {

// Finitely supported element of the free space over a pointed metric space,
// in canonical form: no base-point entry (delta at the base is the zero
// vector) and no zero coefficients.
class Measure {
 public:
  explicit Measure(NumMode mode) : mode_(mode) {}

  NumMode mode() const { return mode_; }
  const std::map<PointId, Scalar>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  Scalar coeff(PointId p) const;

  std::vector<PointId> support() const;

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.mode_ == b.mode_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend Measure canonicalize(const PointedMetricSpace& m,
                              const std::map<PointId, Scalar>& raw);
  friend Measure measure_add(const Measure& a, const Measure& b, PointId base);
  friend Measure measure_scale(const Measure& a, const Scalar& c);

  NumMode mode_;
  std::map<PointId, Scalar> coeffs_;
};

// Drops the base entry and zero coefficients; checks ids and scalar modes.
Measure canonicalize(const PointedMetricSpace& m,
                     const std::map<PointId, Scalar>& raw);

Measure measure_add(const Measure& a, const Measure& b, PointId base);
Measure measure_scale(const Measure& a, const Scalar& c);

// Coefficients of `mu` at points of `keep`, reindexed by `reindex` (old point
// id -> new point id). Used to split measures across l1 summands.
Measure measure_project(const PointedMetricSpace& target, const Measure& mu,
                        const std::vector<PointId>& keep,
                        const std::map<PointId, PointId>& reindex);

// The unit vector (delta_u - delta_v)/d(u,v).
struct Molecule {
  PointId u;
  PointId v;
};

Measure molecule_measure(const PointedMetricSpace& m, const Molecule& mol);

}  // namespace freelip
