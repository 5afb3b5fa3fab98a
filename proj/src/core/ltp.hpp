#pragma once

#include <optional>
#include <utility>

#include "core/metric_space.hpp"

namespace freelip {

// How well a witness pair (u,v) stretches trapezoids over a subset N, and the
// best such pair. ratio = max over ordered pairs u != v of M of
//   min over ordered pairs x != y of N of (d(x,u)+d(y,v)) / (d(x,y)+d(u,v)),
// clamped to [0,1]; modulus = 1 - ratio is the largest eps at which the
// trapezoid condition fails for N. worst_pair is the minimizing (x,y) for the
// winning witness (absent when |N| < 2).
struct LtpReport {
  Subset subset;
  Scalar ratio;
  Scalar modulus;
  std::pair<PointId, PointId> witness;
  std::optional<std::pair<PointId, PointId>> worst_pair;
};

// Worst trapezoid ratio of (u,v) against ordered pairs of N; 1 when |N| < 2.
// Unclamped: values above 1 mean the condition holds with room to spare.
Scalar pair_ratio(const PointedMetricSpace& m, const Subset& n, PointId u,
                  PointId v);

// Exhaustive maximization of pair_ratio over ordered witness pairs;
// deterministic lexicographic tie-break by (u,v).
LtpReport ltp_ratio(const PointedMetricSpace& m, const Subset& n,
                    int jobs = 1);

Scalar ltp_modulus(const PointedMetricSpace& m, const Subset& n, int jobs = 1);

struct PairProfileEntry {
  std::pair<PointId, PointId> subset;
  Scalar modulus;
};

// Modulus of every 2-point subset, ordered lexicographically.
std::vector<PairProfileEntry> all_pairs_profile(const PointedMetricSpace& m,
                                                int jobs = 1);

// Finite extraction of a 2-point trapezoid failure. `pair` is the couple of N
// that witnesses the failure on all of `extracted`; the two excluded sets
// have at most one element each.
struct RamseyReport {
  std::pair<PointId, PointId> pair;
  std::vector<PointId> extracted;
  std::vector<PointId> excluded_x;
  std::vector<PointId> excluded_y;
  Scalar eps;
};

// Requires the failure hypothesis at level eps: every pair u != v outside N
// violates some ordered trapezoid over N. Selects the couple (x0,y0) of N
// violated by the most outside pairs, extracts a pairwise-violating set, and
// removes the (at most one-element) sets that pair correctly with x0 or y0.
RamseyReport ramsey_extract(const PointedMetricSpace& m, const Subset& n,
                            const Scalar& eps);

}  // namespace freelip
