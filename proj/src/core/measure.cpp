#include "core/measure.hpp"

#include "core/errors.hpp"

namespace freelip {

Scalar Measure::coeff(PointId p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Scalar::zero(mode_) : it->second;
}

std::vector<PointId> Measure::support() const {
  std::vector<PointId> s;
  s.reserve(coeffs_.size());
  for (const auto& [p, a] : coeffs_) s.push_back(p);
  return s;
}

Measure canonicalize(const PointedMetricSpace& m,
                     const std::map<PointId, Scalar>& raw) {
  Measure out(m.mode());
  for (const auto& [p, a] : raw) {
    if (p < 0 || p >= m.size())
      throw DomainError("PointOutOfRange", "measure point out of range",
                        {{"point", p}});
    if (a.mode() != m.mode())
      throw DomainError("ModeMismatch",
                        "measure coefficient mode differs from space");
    if (p == m.base() || a.is_zero()) continue;
    out.coeffs_.emplace(p, a);
  }
  return out;
}

Measure measure_add(const Measure& a, const Measure& b, PointId base) {
  if (a.mode() != b.mode())
    throw DomainError("ModeMismatch", "adding measures of different modes");
  Measure out(a.mode());
  out.coeffs_ = a.coeffs_;
  for (const auto& [p, c] : b.coeffs_) {
    auto [it, inserted] = out.coeffs_.emplace(p, c);
    if (!inserted) it->second += c;
  }
  for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
    if (it->second.is_zero() || it->first == base)
      it = out.coeffs_.erase(it);
    else
      ++it;
  }
  return out;
}

Measure measure_scale(const Measure& a, const Scalar& c) {
  Measure out(a.mode());
  if (c.is_zero()) return out;
  for (const auto& [p, v] : a.coeffs_) out.coeffs_.emplace(p, v * c);
  return out;
}

Measure measure_project(const PointedMetricSpace& target, const Measure& mu,
                        const std::vector<PointId>& keep,
                        const std::map<PointId, PointId>& reindex) {
  std::map<PointId, Scalar> raw;
  for (PointId p : keep) {
    auto it = mu.coeffs().find(p);
    if (it == mu.coeffs().end()) continue;
    raw.emplace(reindex.at(p), it->second);
  }
  return canonicalize(target, raw);
}

Measure molecule_measure(const PointedMetricSpace& m, const Molecule& mol) {
  if (mol.u == mol.v)
    throw DomainError("EqualWitnesses", "molecule endpoints must differ",
                      {{"u", mol.u}, {"v", mol.v}});
  if (mol.u < 0 || mol.u >= m.size() || mol.v < 0 || mol.v >= m.size())
    throw DomainError("PointOutOfRange", "molecule point out of range");
  Scalar w = Scalar::one(m.mode()) / m.dist(mol.u, mol.v);
  std::map<PointId, Scalar> raw;
  raw.emplace(mol.u, w);
  raw.emplace(mol.v, -w);
  return canonicalize(m, raw);
}

}  // namespace freelip
