#include "core/octa.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"
#include "core/parallel.hpp"

namespace freelip {

namespace {

bool scalars_equal(NumMode mode, const Scalar& a, const Scalar& b,
                   const Scalar& scale) {
  if (mode == NumMode::Exact) return a == b;
  double slack = kFloatTol * std::max(1.0, scale.to_double());
  return (a - b).abs().to_double() <= slack;
}

bool betweenness_holds(const PointedMetricSpace& m,
                       const ConvexMoleculeCombination& phi, PointId z) {
  Scalar diam = diameter(m);
  for (PointId x : phi.targets) {
    Scalar lhs = m.dist(x, phi.apex);
    Scalar rhs = m.dist(x, z) + m.dist(z, phi.apex);
    if (scalars_equal(m.mode(), lhs, rhs, diam)) return true;
  }
  return false;
}

}  // namespace

OctReport oct_index(const PointedMetricSpace& m, std::vector<Measure> family,
                    int jobs) {
  if (family.empty())
    throw DomainError("EmptyFamily", "octahedrality needs measures");
  if (m.size() < 2)
    throw DomainError("TooFewPoints", "octahedrality needs two points");
  for (auto& mu : family) {
    NormCertificate cert = kr_norm(m, mu);
    if (cert.value.is_zero())
      throw DomainError("ZeroMeasure",
                        "family members must have nonzero norm");
    mu = measure_scale(mu, Scalar::one(m.mode()) / cert.value);
  }

  const size_t cells = static_cast<size_t>(m.size()) * m.size();
  std::vector<std::optional<Scalar>> worst = parallel_map<std::optional<Scalar>>(
      cells, jobs, [&](size_t cell) -> std::optional<Scalar> {
        PointId u = static_cast<PointId>(cell / m.size());
        PointId v = static_cast<PointId>(cell % m.size());
        if (u == v) return std::nullopt;
        Measure mol = molecule_measure(m, {u, v});
        std::optional<Scalar> mn;
        for (const Measure& mu : family) {
          Scalar val = kr_norm(m, measure_add(mu, mol, m.base())).value;
          if (!mn || val < *mn) mn = val;
        }
        return mn;
      });

  std::pair<PointId, PointId> best{0, 1};
  Scalar best_val = *worst[1];
  for (PointId u = 0; u < m.size(); ++u)
    for (PointId v = 0; v < m.size(); ++v) {
      if (u == v) continue;
      const Scalar& val = *worst[static_cast<size_t>(u) * m.size() + v];
      if (val > best_val) {
        best_val = val;
        best = {u, v};
      }
    }

  OctReport report;
  report.index = best_val;
  report.molecule = best;
  Measure mol = molecule_measure(m, {best.first, best.second});
  for (const Measure& mu : family)
    report.per_measure.push_back(
        kr_norm(m, measure_add(mu, mol, m.base())).value);
  return report;
}

ChainReport chain_check(const PointedMetricSpace& m, const Subset& n,
                        int jobs) {
  if (n.ids.size() < 2)
    throw DomainError("TooFewPoints", "chain check needs |N| >= 2");
  if (!n.contains(m.base()))
    throw DomainError("BaseNotInSubset", "chain subset must contain base");

  ChainReport report;
  report.ltp = ltp_ratio(m, n, jobs);

  std::vector<Measure> family;
  for (PointId x : n.ids)
    for (PointId y : n.ids)
      if (x != y) family.push_back(molecule_measure(m, {x, y}));
  report.oct = oct_index(m, std::move(family), jobs);

  const Scalar one = Scalar::one(m.mode());
  const Scalar two = one + one;
  report.lower = two * report.ltp.ratio;
  report.upper = one + report.ltp.ratio;
  if (m.mode() == NumMode::Exact) {
    report.holds =
        report.lower <= report.oct.index && report.oct.index <= report.upper;
  } else {
    Scalar slack = Scalar::real(kFloatTol);
    report.holds = report.lower <= report.oct.index + slack &&
                   report.oct.index <= report.upper + slack;
  }
  return report;
}

void validate_combination(const PointedMetricSpace& m,
                          const ConvexMoleculeCombination& phi) {
  if (phi.targets.empty() || phi.targets.size() != phi.weights.size())
    throw DomainError("InvalidCombination",
                      "targets and weights must be nonempty and aligned");
  if (phi.apex < 0 || phi.apex >= m.size())
    throw DomainError("PointOutOfRange", "apex out of range",
                      {{"point", phi.apex}});
  std::set<PointId> seen;
  Scalar total = Scalar::zero(m.mode());
  for (size_t i = 0; i < phi.targets.size(); ++i) {
    PointId x = phi.targets[i];
    if (x < 0 || x >= m.size())
      throw DomainError("PointOutOfRange", "target out of range",
                        {{"point", x}});
    if (x == phi.apex)
      throw DomainError("InvalidCombination", "target equals the apex",
                        {{"point", x}});
    if (!seen.insert(x).second)
      throw DomainError("InvalidCombination", "duplicate target",
                        {{"point", x}});
    if (!phi.weights[i].is_positive())
      throw DomainError("InvalidCombination", "weights must be positive",
                        {{"weight", phi.weights[i].str()}});
    total += phi.weights[i];
  }
  bool unit = m.mode() == NumMode::Exact
                  ? total == Scalar::one(m.mode())
                  : (total - Scalar::one(m.mode())).abs().to_double() <=
                        kFloatTol;
  if (!unit)
    throw DomainError("InvalidCombination", "weights must sum to one",
                      {{"sum", total.str()}});
}

Measure combination_measure(const PointedMetricSpace& m,
                            const ConvexMoleculeCombination& phi) {
  validate_combination(m, phi);
  std::map<PointId, Scalar> raw;
  Scalar apex_mass = Scalar::zero(m.mode());
  for (size_t i = 0; i < phi.targets.size(); ++i) {
    Scalar a = phi.weights[i] / m.dist(phi.targets[i], phi.apex);
    raw.emplace(phi.targets[i], a);
    apex_mass -= a;
  }
  raw.emplace(phi.apex, apex_mass);
  return canonicalize(m, raw);
}

ConvexMoleculeCombination combination_from_measure(const PointedMetricSpace& m,
                                                   const Measure& mu) {
  ConvexMoleculeCombination phi;
  std::vector<PointId> negatives;
  for (const auto& [p, a] : mu.coeffs())
    if (a.is_negative()) negatives.push_back(p);
  if (negatives.empty()) {
    phi.apex = m.base();
  } else if (negatives.size() == 1) {
    phi.apex = negatives[0];
  } else {
    throw DomainError("InvalidCombination",
                      "measure has more than one negative coefficient");
  }
  for (const auto& [p, a] : mu.coeffs()) {
    if (p == phi.apex) continue;
    phi.targets.push_back(p);
    phi.weights.push_back(a * m.dist(p, phi.apex));
  }
  validate_combination(m, phi);
  // The apex coefficient is forced by the weights; re-encoding must
  // reproduce the measure.
  if (!(combination_measure(m, phi) == mu))
    throw DomainError("InvalidCombination",
                      "measure is not a convex molecule combination");
  return phi;
}

DiffReport frechet_check(const PointedMetricSpace& m,
                         const ConvexMoleculeCombination& phi) {
  validate_combination(m, phi);
  DiffReport report;
  report.apex = phi.apex;
  report.differentiable = true;
  for (PointId z = 0; z < m.size(); ++z) {
    if (!betweenness_holds(m, phi, z)) {
      report.differentiable = false;
      report.witness_point = z;
      report.witnesses = gateaux_witnesses(m, phi, z);
      break;
    }
  }
  return report;
}

std::pair<LipschitzWitness, LipschitzWitness> gateaux_witnesses(
    const PointedMetricSpace& m, const ConvexMoleculeCombination& phi,
    PointId z) {
  validate_combination(m, phi);
  if (z < 0 || z >= m.size())
    throw DomainError("PointOutOfRange", "witness point out of range",
                      {{"point", z}});
  if (betweenness_holds(m, phi, z))
    throw DomainError("BetweennessHolds",
                      "point lies between a target and the apex",
                      {{"point", z}});

  // Work in the space re-based at the apex so the witnesses vanish there.
  PointedMetricSpace rebased = m.rebased(phi.apex);
  std::map<PointId, Scalar> f1, f2;
  f1.emplace(phi.apex, Scalar::zero(m.mode()));
  f2.emplace(phi.apex, Scalar::zero(m.mode()));
  Scalar f2z = -m.dist(phi.apex, z);
  for (PointId x : phi.targets) {
    Scalar dx = m.dist(phi.apex, x);
    f1.emplace(x, dx);
    f2.emplace(x, dx);
    f2z = max(f2z, dx - m.dist(z, x));
  }
  f1.emplace(z, m.dist(phi.apex, z));
  f2.emplace(z, f2z);

  // z is neither the apex nor a target, else betweenness would hold.
  std::vector<PointId> anchor_ids = {phi.apex};
  for (PointId x : phi.targets) anchor_ids.push_back(x);
  anchor_ids.push_back(z);
  Subset anchors = Subset::checked(rebased, anchor_ids);

  const Scalar one = Scalar::one(m.mode());
  return {mcshane_extend(rebased, anchors, f1, one, ExtendSide::Lower),
          mcshane_extend(rebased, anchors, f2, one, ExtendSide::Lower)};
}

}  // namespace freelip
