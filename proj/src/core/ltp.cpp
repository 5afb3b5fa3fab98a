#include "core/ltp.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/parallel.hpp"

namespace freelip {

namespace {

// Ordered trapezoid ratio (d(x,u)+d(y,v)) / (d(x,y)+d(u,v)).
Scalar trapezoid_ratio(const PointedMetricSpace& m, PointId x, PointId y,
                       PointId u, PointId v) {
  return (m.dist(x, u) + m.dist(y, v)) / (m.dist(x, y) + m.dist(u, v));
}

Scalar clamp_to_one(const Scalar& s, NumMode mode) {
  return min(s, Scalar::one(mode));
}

// Unordered 2-point failure at level eps, as used by the Ramsey extraction:
// (1-eps)(d(x,y)+d(u,v)) > min(d(x,u)+d(y,v), d(x,v)+d(y,u)).
bool violates_two_point(const PointedMetricSpace& m, PointId x, PointId y,
                        PointId u, PointId v, const Scalar& one_minus_eps) {
  Scalar lhs = one_minus_eps * (m.dist(x, y) + m.dist(u, v));
  Scalar rhs =
      min(m.dist(x, u) + m.dist(y, v), m.dist(x, v) + m.dist(y, u));
  return lhs > rhs;
}

}  // namespace

Scalar pair_ratio(const PointedMetricSpace& m, const Subset& n, PointId u,
                  PointId v) {
  if (u == v)
    throw DomainError("EqualWitnesses", "witness points must differ",
                      {{"u", u}, {"v", v}});
  if (u < 0 || u >= m.size() || v < 0 || v >= m.size())
    throw DomainError("PointOutOfRange", "witness point out of range");
  std::optional<Scalar> worst;
  for (PointId x : n.ids)
    for (PointId y : n.ids) {
      if (x == y) continue;  // reduces to the triangle inequality
      Scalar r = trapezoid_ratio(m, x, y, u, v);
      if (!worst || r < *worst) worst = r;
    }
  return worst ? *worst : Scalar::one(m.mode());
}

LtpReport ltp_ratio(const PointedMetricSpace& m, const Subset& n, int jobs) {
  if (m.size() < 2)
    throw DomainError("TooFewPoints", "need at least two points for witnesses");
  const size_t cells = static_cast<size_t>(m.size()) * m.size();
  std::vector<Scalar> ratios = parallel_map<Scalar>(
      cells, jobs, [&](size_t cell) {
        PointId u = static_cast<PointId>(cell / m.size());
        PointId v = static_cast<PointId>(cell % m.size());
        if (u == v) return Scalar::zero(m.mode());
        return clamp_to_one(pair_ratio(m, n, u, v), m.mode());
      });

  std::pair<PointId, PointId> best{0, 1};
  Scalar best_ratio = ratios[1];
  for (PointId u = 0; u < m.size(); ++u)
    for (PointId v = 0; v < m.size(); ++v) {
      if (u == v) continue;
      const Scalar& r = ratios[static_cast<size_t>(u) * m.size() + v];
      if (r > best_ratio) {
        best_ratio = r;
        best = {u, v};
      }
    }

  LtpReport report;
  report.subset = n;
  report.ratio = best_ratio;
  report.modulus = Scalar::one(m.mode()) - best_ratio;
  report.witness = best;
  if (n.ids.size() >= 2) {
    std::optional<Scalar> worst;
    for (PointId x : n.ids)
      for (PointId y : n.ids) {
        if (x == y) continue;
        Scalar r = trapezoid_ratio(m, x, y, best.first, best.second);
        if (!worst || r < *worst) {
          worst = r;
          report.worst_pair = {x, y};
        }
      }
  }
  return report;
}

Scalar ltp_modulus(const PointedMetricSpace& m, const Subset& n, int jobs) {
  return ltp_ratio(m, n, jobs).modulus;
}

std::vector<PairProfileEntry> all_pairs_profile(const PointedMetricSpace& m,
                                                int jobs) {
  if (m.size() < 2)
    throw DomainError("TooFewPoints", "profile needs at least two points");
  std::vector<std::pair<PointId, PointId>> pairs;
  for (PointId i = 0; i < m.size(); ++i)
    for (PointId j = i + 1; j < m.size(); ++j) pairs.emplace_back(i, j);
  std::vector<Scalar> moduli = parallel_map<Scalar>(
      pairs.size(), jobs, [&](size_t idx) {
        auto [i, j] = pairs[idx];
        return ltp_ratio(m, Subset{{i, j}}, 1).modulus;
      });
  std::vector<PairProfileEntry> out(pairs.size());
  for (size_t idx = 0; idx < pairs.size(); ++idx)
    out[idx] = {pairs[idx], moduli[idx]};
  return out;
}

RamseyReport ramsey_extract(const PointedMetricSpace& m, const Subset& n,
                            const Scalar& eps) {
  if (n.ids.size() < 2)
    throw DomainError("TooFewPoints", "need two subset points for a failure");
  const Scalar one = Scalar::one(m.mode());
  if (!eps.is_positive() || !(eps < one))
    throw DomainError("InvalidEpsilon", "failure level must lie in (0,1)",
                      {{"eps", eps.str()}});
  const Scalar level = one - eps;

  std::vector<PointId> outside;
  for (PointId p = 0; p < m.size(); ++p)
    if (!n.contains(p)) outside.push_back(p);

  // Hypothesis: every outside pair is violated by some ordered couple of N.
  for (size_t a = 0; a < outside.size(); ++a)
    for (size_t b = a + 1; b < outside.size(); ++b) {
      bool violated = false;
      for (PointId x : n.ids) {
        for (PointId y : n.ids) {
          if (x != y &&
              violates_two_point(m, x, y, outside[a], outside[b], level)) {
            violated = true;
            break;
          }
        }
        if (violated) break;
      }
      if (!violated)
        throw DomainError("HypothesisFails",
                          "a pair outside the subset satisfies all trapezoids",
                          {{"u", outside[a]}, {"v", outside[b]}});
    }

  // Pigeonhole: the couple of N that violates the most outside pairs.
  std::pair<PointId, PointId> chosen{n.ids[0], n.ids[1]};
  size_t chosen_count = 0;
  bool first = true;
  for (PointId x : n.ids)
    for (PointId y : n.ids) {
      if (x == y) continue;
      size_t count = 0;
      for (size_t a = 0; a < outside.size(); ++a)
        for (size_t b = a + 1; b < outside.size(); ++b)
          if (violates_two_point(m, x, y, outside[a], outside[b], level))
            ++count;
      if (first || count > chosen_count) {
        first = false;
        chosen = {x, y};
        chosen_count = count;
      }
    }
  auto [x0, y0] = chosen;

  // Greedy pairwise-violating subset of the outside points, in index order.
  std::vector<PointId> prime;
  for (PointId w : outside) {
    bool ok = true;
    for (PointId z : prime)
      if (!violates_two_point(m, x0, y0, z, w, level)) {
        ok = false;
        break;
      }
    if (ok) prime.push_back(w);
  }

  // Points of the extracted set that pair correctly with x0 resp. y0; each is
  // a singleton at most once the set is pairwise-violating.
  std::vector<PointId> ex_x, ex_y;
  for (PointId w : prime) {
    if (m.dist(y0, w) >= level * (m.dist(x0, y0) + m.dist(x0, w)))
      ex_x.push_back(w);
    if (m.dist(x0, w) >= level * (m.dist(x0, y0) + m.dist(y0, w)))
      ex_y.push_back(w);
  }

  RamseyReport report;
  report.pair = chosen;
  report.eps = eps;
  report.excluded_x = ex_x;
  report.excluded_y = ex_y;
  report.extracted = {x0, y0};
  for (PointId w : prime) {
    bool excluded =
        std::find(ex_x.begin(), ex_x.end(), w) != ex_x.end() ||
        std::find(ex_y.begin(), ex_y.end(), w) != ex_y.end();
    if (!excluded) report.extracted.push_back(w);
  }
  std::sort(report.extracted.begin(), report.extracted.end());

  // Full re-check of the output invariant.
  for (size_t a = 0; a < report.extracted.size(); ++a)
    for (size_t b = a + 1; b < report.extracted.size(); ++b)
      if (!violates_two_point(m, x0, y0, report.extracted[a],
                              report.extracted[b], level))
        throw std::logic_error("ramsey extraction invariant broken");
  return report;
}

}  // namespace freelip
