#pragma once

#include <map>

#include "core/measure.hpp"

namespace freelip {

// A real function on the points of a space, vanishing at the base point,
// together with its computed Lipschitz constant.
struct LipschitzWitness {
  std::vector<Scalar> values;  // indexed by PointId
  Scalar lip;

  // Pairing <f, mu> = sum of coefficients times values.
  Scalar evaluate(const Measure& mu) const;
};

struct TransportArc {
  PointId src;
  PointId dst;
  Scalar mass;  // > 0
};

// Paired primal/dual optimality certificate for a free-space norm value:
// cost(plan) == value == <witness, mu>, exactly in rational mode.
struct NormCertificate {
  Scalar value;
  std::vector<TransportArc> plan;
  LipschitzWitness witness;
};

// Free-space (Kantorovich-Rubinstein) norm of a canonical measure. Solves the
// uncapacitated min-cost flow problem on the complete graph over
// supp(mu) + base by network simplex (star-at-base initial tree, Bland's
// anti-cycling rule, exact rational pivots in exact mode). The dual witness is
// canonicalized to the componentwise-minimal optimal potential vector with
// f(base) = 0 and then extended to all of M, so output is deterministic.
// An empty measure yields value 0 with empty certificates.
NormCertificate kr_norm(const PointedMetricSpace& m, const Measure& mu);

// Best Lipschitz constant of f over all pairs; 0 for constant functions.
// f must assign a value to every point.
Scalar lip_constant(const PointedMetricSpace& m,
                    const std::vector<Scalar>& f);

enum class ExtendSide { Lower, Upper };

// McShane-Whitney extension of an L-Lipschitz function given on N (which must
// contain the base, with value 0 there) to the whole space:
//   lower:  f~(p) = min over x in N of f(x) + L d(x,p)
//   upper:  f~(p) = max over x in N of f(x) - L d(x,p)
// The restriction to N is f and the extension is again L-Lipschitz.
LipschitzWitness mcshane_extend(const PointedMetricSpace& m, const Subset& n,
                                const std::map<PointId, Scalar>& f,
                                const Scalar& lip_bound, ExtendSide side);

// Witness-pair extension: given a 1-Lipschitz f on N and fresh points
// u, v not in N, sets
//   f~(u) = min over x in N of f(x) + (1+eps) d(x,u)
//   f~(v) = max over x in N + {u} of f~(x) - (1+eps) d(x,v)
// and McShane-extends the result at constant (1+eps) to all of M. The output
// is always (1+eps)-Lipschitz; whenever pair_ratio(m,n,u,v) >= 1/(1+eps) it
// additionally satisfies f~(u) - f~(v) >= d(u,v).
LipschitzWitness ltp_extend(const PointedMetricSpace& m, const Subset& n,
                            const std::map<PointId, Scalar>& f, PointId u,
                            PointId v, const Scalar& eps);

}  // namespace freelip
