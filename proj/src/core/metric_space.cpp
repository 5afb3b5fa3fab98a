#include "core/metric_space.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"

namespace freelip {

namespace {

Scalar float_slack(const Scalar& reference) {
  double mag = std::max(1.0, reference.abs().to_double());
  return Scalar::real(kFloatTol * mag);
}

void check_axioms(const std::vector<Scalar>& d, int n, NumMode mode) {
  const Scalar zero = Scalar::zero(mode);
  auto at = [&](int a, int b) -> const Scalar& { return d[a * n + b]; };
  for (int a = 0; a < n; ++a) {
    const Scalar& daa = at(a, a);
    bool bad = mode == NumMode::Exact ? !daa.is_zero()
                                      : daa.abs() > float_slack(daa);
    if (bad)
      throw DomainError("NonzeroDiagonal", "nonzero diagonal entry",
                        {{"a", a}});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (at(a, b) != at(b, a)) {
        bool bad = mode == NumMode::Exact ||
                   (at(a, b) - at(b, a)).abs() > float_slack(at(a, b));
        if (bad)
          throw DomainError("Asymmetric", "distance matrix is not symmetric",
                            {{"a", a}, {"b", b}});
      }
      bool pos = mode == NumMode::Exact ? at(a, b).is_positive()
                                        : at(a, b) > float_slack(at(a, b));
      if (!pos)
        throw DomainError("NonpositiveOffDiagonal",
                          "off-diagonal distance must be positive",
                          {{"a", a}, {"b", b}});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        Scalar lhs = at(a, c);
        Scalar rhs = at(a, b) + at(b, c);
        bool bad = mode == NumMode::Exact ? lhs > rhs
                                          : lhs > rhs + float_slack(lhs);
        if (bad)
          throw DomainError("TriangleViolation",
                            "triangle inequality violated",
                            {{"a", a}, {"b", b}, {"c", c}});
      }
    }
}

}  // namespace

PointedMetricSpace PointedMetricSpace::rebased(PointId new_base) const {
  if (new_base < 0 || new_base >= n_)
    throw DomainError("PointOutOfRange", "base index out of range",
                      {{"point", new_base}});
  PointedMetricSpace out = *this;
  out.base_ = new_base;
  return out;
}

bool Subset::contains(PointId p) const {
  return std::find(ids.begin(), ids.end(), p) != ids.end();
}

Subset Subset::all(const PointedMetricSpace& m) {
  Subset s;
  s.ids.resize(m.size());
  for (int i = 0; i < m.size(); ++i) s.ids[i] = i;
  return s;
}

Subset Subset::checked(const PointedMetricSpace& m, std::vector<PointId> ids) {
  std::set<PointId> seen;
  for (PointId p : ids) {
    if (p < 0 || p >= m.size())
      throw DomainError("PointOutOfRange", "subset point out of range",
                        {{"point", p}});
    if (!seen.insert(p).second)
      throw DomainError("InvalidSubset", "duplicate point in subset",
                        {{"point", p}});
  }
  return Subset{std::move(ids)};
}

PointedMetricSpace validate_metric(const std::vector<std::vector<Scalar>>& dist,
                                   PointId base,
                                   std::vector<std::string> names) {
  int n = static_cast<int>(dist.size());
  if (n < 1) throw DomainError("TooFewPoints", "space needs at least 1 point");
  if (base < 0 || base >= n)
    throw DomainError("PointOutOfRange", "base index out of range",
                      {{"point", base}});
  for (const auto& row : dist)
    if (static_cast<int>(row.size()) != n)
      throw DomainError("InvalidMatrix", "distance matrix is not square");

  NumMode mode = dist[0][0].mode();
  std::vector<Scalar> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : dist)
    for (const auto& v : row) {
      if (v.mode() != mode)
        throw DomainError("ModeMismatch",
                          "mixed exact/float entries in distance matrix");
      flat.push_back(v);
    }
  check_axioms(flat, n, mode);

  if (names.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = "p" + std::to_string(i);
  } else if (static_cast<int>(names.size()) != n) {
    throw DomainError("InvalidMatrix", "name list size differs from matrix");
  }

  PointedMetricSpace m;
  m.n_ = n;
  m.base_ = base;
  m.mode_ = mode;
  m.dist_ = std::move(flat);
  m.names_ = std::move(names);
  return m;
}

PointedMetricSpace scale_space(const PointedMetricSpace& m, const Scalar& s) {
  if (s.mode() != m.mode())
    throw DomainError("ModeMismatch", "scale factor mode differs from space");
  if (!s.is_positive())
    throw DomainError("NonpositiveScale", "scale factor must be positive",
                      {{"factor", s.str()}});
  PointedMetricSpace out = m;
  for (auto& v : out.dist_) v *= s;
  return out;
}

PointedMetricSpace restrict_space(const PointedMetricSpace& m,
                                  const Subset& s) {
  if (!s.contains(m.base()))
    throw DomainError("BaseNotInSubset",
                      "restriction subset must contain the base point");
  int k = static_cast<int>(s.ids.size());
  std::vector<std::vector<Scalar>> d(k, std::vector<Scalar>(k));
  std::vector<std::string> names(k);
  PointId new_base = 0;
  for (int i = 0; i < k; ++i) {
    if (s.ids[i] == m.base()) new_base = i;
    names[i] = m.name(s.ids[i]);
    for (int j = 0; j < k; ++j) d[i][j] = m.dist(s.ids[i], s.ids[j]);
  }
  return validate_metric(d, new_base, std::move(names));
}

PointedMetricSpace l1_sum(const PointedMetricSpace& t1,
                          const PointedMetricSpace& t2) {
  if (t1.mode() != t2.mode())
    throw DomainError("ModeMismatch", "l1 sum requires matching modes");
  int n1 = t1.size();
  int n2 = t2.size();
  int n = n1 + n2 - 1;  // bases identified
  std::vector<PointId> part2;  // second part's points in output order
  for (PointId p = 0; p < n2; ++p)
    if (p != t2.base()) part2.push_back(p);

  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n));
  std::vector<std::string> names(n);
  for (PointId a = 0; a < n1; ++a) {
    names[a] = t1.name(a);
    for (PointId b = 0; b < n1; ++b) d[a][b] = t1.dist(a, b);
  }
  for (int i = 0; i < static_cast<int>(part2.size()); ++i) {
    PointId gi = n1 + i;
    names[gi] = t2.name(part2[i]);
    for (int j = 0; j < static_cast<int>(part2.size()); ++j)
      d[gi][n1 + j] = t2.dist(part2[i], part2[j]);
    for (PointId a = 0; a < n1; ++a) {
      Scalar cross = t1.dist(a, t1.base()) + t2.dist(t2.base(), part2[i]);
      d[a][gi] = cross;
      d[gi][a] = cross;
    }
  }
  return validate_metric(d, t1.base(), std::move(names));
}

PointId l1_sum_index(const PointedMetricSpace& t1,
                     const PointedMetricSpace& t2, int part, PointId p) {
  if (part == 0) return p;
  if (p == t2.base()) return t1.base();
  PointId off = 0;
  for (PointId q = 0; q < p; ++q)
    if (q != t2.base()) ++off;
  return t1.size() + off;
}

Scalar min_separation(const PointedMetricSpace& m) {
  if (m.size() < 2)
    throw DomainError("TooFewPoints",
                      "min separation needs at least two points");
  Scalar best = m.dist(0, 1);
  for (int a = 0; a < m.size(); ++a)
    for (int b = a + 1; b < m.size(); ++b) best = min(best, m.dist(a, b));
  return best;
}

Scalar diameter(const PointedMetricSpace& m) {
  Scalar best = Scalar::zero(m.mode());
  for (int a = 0; a < m.size(); ++a)
    for (int b = a + 1; b < m.size(); ++b) best = max(best, m.dist(a, b));
  return best;
}

}  // namespace freelip
