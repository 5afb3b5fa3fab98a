#pragma once

#include <optional>

#include "core/ltp.hpp"
#include "core/transport.hpp"

namespace freelip {

// Octahedrality index of a family of unit measures: the best molecule's worst
// alignment, max over molecules (u,v) of min over mu of ||mu + mol(u,v)||.
// Always in [0,2]; 2 - index is a thickness-style defect.
struct OctReport {
  Scalar index;
  std::pair<PointId, PointId> molecule;
  std::vector<Scalar> per_measure;  // values at the winning molecule
};

// Measures are normalized to unit norm first (ZeroMeasure if impossible).
// The outer molecule loop is exhaustive over ordered pairs of M with
// deterministic index-order tie-breaking.
OctReport oct_index(const PointedMetricSpace& m, std::vector<Measure> family,
                    int jobs = 1);

// Two-sided comparison of the LTP ratio R(N) with the octahedrality index of
// the molecule family of N: 2R <= OCT(mol(N)) <= 1 + R, exact in rational
// mode. N must contain the base point.
struct ChainReport {
  LtpReport ltp;
  OctReport oct;
  Scalar lower;  // 2R
  Scalar upper;  // 1 + R
  bool holds;
};

ChainReport chain_check(const PointedMetricSpace& m, const Subset& n,
                        int jobs = 1);

// phi = sum of weights[i] * (delta_targets[i] - delta_apex) / d(targets[i],
// apex): a convex combination of molecules sharing an apex. Weights are
// positive and sum to one; targets are distinct and differ from the apex.
struct ConvexMoleculeCombination {
  std::vector<PointId> targets;
  std::vector<Scalar> weights;
  PointId apex;
};

// Checks the shape invariants against a space (InvalidCombination).
void validate_combination(const PointedMetricSpace& m,
                          const ConvexMoleculeCombination& phi);

// The combination as a canonical measure (after re-basing at the apex when
// the apex is not the base point, delta_apex simply drops out).
Measure combination_measure(const PointedMetricSpace& m,
                            const ConvexMoleculeCombination& phi);

// Inverse of the above: recognizes a canonical measure as a convex molecule
// combination, taking the unique negative-coefficient point (or the base) as
// apex. InvalidCombination when the measure has no such shape.
ConvexMoleculeCombination combination_from_measure(const PointedMetricSpace& m,
                                                   const Measure& mu);

// Differentiability verdict for the free-space norm at phi. The norm is
// Frechet (equivalently Gateaux) differentiable at phi exactly when every
// point z lies metrically between some target and the apex:
// d(x_i, apex) = d(x_i, z) + d(z, apex). When the criterion fails, witnesses
// holds the two distinct norm-one functions that both norm phi; their values
// vanish at the apex (the space is implicitly re-based there).
struct DiffReport {
  bool differentiable;
  PointId apex;
  std::optional<PointId> witness_point;
  std::optional<std::pair<LipschitzWitness, LipschitzWitness>> witnesses;
};

DiffReport frechet_check(const PointedMetricSpace& m,
                         const ConvexMoleculeCombination& phi);

// The two norming functions for a betweenness-violating point z:
//   f1 = d(apex, .) on apex, targets and z;
//   f2 agrees on apex and targets, f2(z) = max(-d(apex,z),
//       max_i d(x_i,apex) - d(z,x_i));
// both extended to M at constant 1. Errors with BetweennessHolds when z is
// not a violation.
std::pair<LipschitzWitness, LipschitzWitness> gateaux_witnesses(
    const PointedMetricSpace& m, const ConvexMoleculeCombination& phi,
    PointId z);

}  // namespace freelip
