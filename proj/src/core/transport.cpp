#include "core/transport.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "core/errors.hpp"

namespace freelip {

namespace {

// Uncapacitated min-cost flow on the complete digraph over the measure's
// support plus the base point. The spanning tree is stored as an edge map and
// re-rooted after every pivot; at this problem size clarity beats the usual
// incremental bookkeeping.
class NetworkSimplex {
 public:
  NetworkSimplex(const PointedMetricSpace& m, const Measure& mu) : m_(m) {
    mode_ = m.mode();
    std::vector<PointId> supp = mu.support();
    std::set<PointId> node_set(supp.begin(), supp.end());
    node_set.insert(m.base());
    nodes_.assign(node_set.begin(), node_set.end());
    k_ = static_cast<int>(nodes_.size());
    supply_.assign(k_, Scalar::zero(mode_));
    Scalar total = Scalar::zero(mode_);
    for (int i = 0; i < k_; ++i) {
      if (nodes_[i] == m.base()) root_ = i;
      supply_[i] = mu.coeff(nodes_[i]);
      total += supply_[i];
    }
    supply_[root_] -= total;  // the base absorbs the balance
    if (mode_ == NumMode::Float) {
      double scale = 0.0;
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
          if (i != j) scale = std::max(scale, cost(i, j).to_double());
      enter_tol_ = 1e-12 * (1.0 + scale);
    }
  }

  void solve() {
    build_star_tree();
    refresh_tree_arrays();
    // Bland's rule terminates in exact arithmetic; the cap only guards the
    // float path against comparison pathologies.
    long budget = 1000 + 100L * k_ * k_;
    while (budget-- > 0) {
      auto entering = find_entering_arc();
      if (!entering) return;
      pivot(entering->first, entering->second);
      refresh_tree_arrays();
    }
    throw std::logic_error("network simplex exceeded its pivot budget");
  }

  int node_count() const { return k_; }
  PointId node(int i) const { return nodes_[i]; }
  int root() const { return root_; }

  Scalar objective() const {
    Scalar v = Scalar::zero(mode_);
    for (const auto& [key, e] : edges_) v += e.flow * cost(e.from, e.to);
    return v;
  }

  std::vector<TransportArc> plan() const {
    std::vector<TransportArc> arcs;
    for (const auto& [key, e] : edges_) {
      if (!flow_positive(e.flow)) continue;
      arcs.push_back({nodes_[e.from], nodes_[e.to], e.flow});
    }
    std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
      return a.src != b.src ? a.src < b.src : a.dst < b.dst;
    });
    return arcs;
  }

  // Componentwise-minimal optimal dual potentials with value 0 at the root:
  // the optimal face is cut out by difference constraints (1-Lipschitz
  // inequalities plus equality on arcs carrying flow), so the minimum is
  // -shortest_distance(node -> root) in the constraint graph. Bellman-Ford;
  // exact in rational mode.
  std::vector<Scalar> canonical_potentials() const {
    struct Edge {
      int from, to;
      Scalar w;
    };
    // Reversed constraint edges, so one pass from the root reaches everyone.
    std::vector<Edge> edges;
    for (int a = 0; a < k_; ++a)
      for (int b = 0; b < k_; ++b)
        if (a != b) edges.push_back({a, b, cost(a, b)});
    for (const auto& [key, e] : edges_)
      if (flow_positive(e.flow))
        edges.push_back({e.to, e.from, -cost(e.from, e.to)});

    std::vector<std::optional<Scalar>> dist(k_);
    dist[root_] = Scalar::zero(mode_);
    for (int round = 0; round < k_; ++round) {
      bool changed = false;
      for (const auto& e : edges) {
        if (!dist[e.from]) continue;
        Scalar cand = *dist[e.from] + e.w;
        if (!dist[e.to] || cand < *dist[e.to]) {
          dist[e.to] = cand;
          changed = true;
        }
      }
      if (!changed) break;
    }
    std::vector<Scalar> pot(k_, Scalar::zero(mode_));
    for (int i = 0; i < k_; ++i) pot[i] = -*dist[i];
    return pot;
  }

 private:
  struct TreeEdge {
    int from, to;  // arc orientation
    Scalar flow;
  };

  static std::pair<int, int> ekey(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
  }

  Scalar cost(int i, int j) const { return m_.dist(nodes_[i], nodes_[j]); }

  int arc_id(int from, int to) const { return from * k_ + to; }

  bool flow_positive(const Scalar& f) const {
    if (mode_ == NumMode::Exact) return f.is_positive();
    return f.to_double() > enter_tol_;
  }

  void build_star_tree() {
    edges_.clear();
    for (int i = 0; i < k_; ++i) {
      if (i == root_) continue;
      if (supply_[i].is_negative())
        edges_[ekey(i, root_)] = {root_, i, -supply_[i]};
      else
        edges_[ekey(i, root_)] = {i, root_, supply_[i]};
    }
  }

  // Rebuilds parent/depth/potential arrays from the edge map by a BFS from
  // the root. Called after every pivot.
  void refresh_tree_arrays() {
    parent_.assign(k_, -1);
    depth_.assign(k_, 0);
    pot_.assign(k_, Scalar::zero(mode_));
    std::vector<std::vector<int>> adj(k_);
    for (const auto& [key, e] : edges_) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    std::vector<int> stack{root_};
    std::vector<bool> seen(k_, false);
    seen[root_] = true;
    parent_[root_] = root_;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        parent_[y] = x;
        depth_[y] = depth_[x] + 1;
        const TreeEdge& e = edges_.at(ekey(x, y));
        // Zero reduced cost along tree arcs fixes the potentials.
        pot_[y] = e.from == y ? pot_[x] + cost(y, x) : pot_[x] - cost(x, y);
        stack.push_back(y);
      }
    }
  }

  // Bland's rule: the first arc (in id order) with negative reduced cost.
  std::optional<std::pair<int, int>> find_entering_arc() const {
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        if (i == j || edges_.count(ekey(i, j))) continue;
        Scalar r = cost(i, j) - pot_[i] + pot_[j];
        bool negative = mode_ == NumMode::Exact
                            ? r.is_negative()
                            : r.to_double() < -enter_tol_;
        if (negative) return std::make_pair(i, j);
      }
    return std::nullopt;
  }

  void pivot(int u, int v) {
    // Cycle: u ->(entering) v, then v back up to u through the tree. A step
    // along the walk is "aligned" when it follows the underlying arc.
    struct Step {
      int node;     // child endpoint of the tree edge
      bool aligned;
    };
    std::vector<Step> walk;
    int a = v, b = u;
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        // walking up from the v side: child -> parent
        const TreeEdge& e = edges_.at(ekey(a, parent_[a]));
        walk.push_back({a, e.from == a});
        a = parent_[a];
      } else {
        // walking down toward u: parent -> child
        const TreeEdge& e = edges_.at(ekey(b, parent_[b]));
        walk.push_back({b, e.from == parent_[b]});
        b = parent_[b];
      }
    }

    // Ratio test over anti-aligned edges; Bland tie-break by arc id.
    std::optional<Scalar> theta;
    int leave_node = -1;
    int leave_id = -1;
    for (const Step& s : walk) {
      if (s.aligned) continue;
      const TreeEdge& e = edges_.at(ekey(s.node, parent_[s.node]));
      int id = arc_id(e.from, e.to);
      if (!theta || e.flow < *theta || (e.flow == *theta && id < leave_id)) {
        theta = e.flow;
        leave_node = s.node;
        leave_id = id;
      }
    }
    if (!theta)
      throw std::logic_error("negative-cost directed cycle in metric flow");

    for (const Step& s : walk) {
      TreeEdge& e = edges_.at(ekey(s.node, parent_[s.node]));
      if (s.aligned)
        e.flow += *theta;
      else
        e.flow -= *theta;
    }
    edges_.erase(ekey(leave_node, parent_[leave_node]));
    edges_[ekey(u, v)] = {u, v, *theta};
  }

  const PointedMetricSpace& m_;
  NumMode mode_;
  int k_ = 0;
  int root_ = 0;
  std::vector<PointId> nodes_;
  std::vector<Scalar> supply_;
  std::map<std::pair<int, int>, TreeEdge> edges_;
  std::vector<int> parent_, depth_;
  std::vector<Scalar> pot_;
  double enter_tol_ = 0.0;
};

Scalar lip_between(const PointedMetricSpace& m, const Scalar& fa,
                   const Scalar& fb, PointId a, PointId b) {
  return (fa - fb).abs() / m.dist(a, b);
}

void require_values_match(const Subset& n, const std::map<PointId, Scalar>& f) {
  if (f.size() != n.ids.size())
    throw DomainError("InvalidWitnessValues",
                      "value map must cover the subset exactly");
  for (PointId p : n.ids)
    if (!f.count(p))
      throw DomainError("InvalidWitnessValues",
                        "missing value for subset point", {{"point", p}});
}

// Worst pair check that f is L-Lipschitz on N.
void require_lipschitz_on(const PointedMetricSpace& m, const Subset& n,
                          const std::map<PointId, Scalar>& f,
                          const Scalar& bound) {
  Scalar slack = m.mode() == NumMode::Float
                     ? Scalar::real(kFloatTol)
                     : Scalar::zero(m.mode());
  for (PointId a : n.ids)
    for (PointId b : n.ids) {
      if (a >= b) continue;
      Scalar q = lip_between(m, f.at(a), f.at(b), a, b);
      if (q > bound + slack)
        throw DomainError(
            "NotLipschitzOnSubset",
            "function exceeds the Lipschitz bound on the subset",
            {{"bound", bound.str()}, {"ratio", q.str()}, {"pair", {a, b}}});
    }
}

LipschitzWitness finish_witness(const PointedMetricSpace& m,
                                std::vector<Scalar> values) {
  LipschitzWitness w;
  w.values = std::move(values);
  w.lip = lip_constant(m, w.values);
  return w;
}

}  // namespace

Scalar LipschitzWitness::evaluate(const Measure& mu) const {
  Scalar total = Scalar::zero(mu.mode());
  for (const auto& [p, a] : mu.coeffs()) total += a * values[p];
  return total;
}

NormCertificate kr_norm(const PointedMetricSpace& m, const Measure& mu) {
  if (mu.mode() != m.mode())
    throw DomainError("ModeMismatch", "measure mode differs from space");
  for (PointId p : mu.support())
    if (p < 0 || p >= m.size())
      throw DomainError("PointOutOfRange", "measure point out of range",
                        {{"point", p}});

  NormCertificate cert;
  if (mu.empty()) {
    cert.value = Scalar::zero(m.mode());
    cert.witness.values.assign(m.size(), Scalar::zero(m.mode()));
    cert.witness.lip = Scalar::zero(m.mode());
    return cert;
  }

  NetworkSimplex solver(m, mu);
  solver.solve();
  cert.value = solver.objective();
  cert.plan = solver.plan();

  std::vector<Scalar> pot = solver.canonical_potentials();
  // McShane extension of the node potentials to the rest of the space keeps
  // the Lipschitz bound and the pairing with mu.
  std::vector<Scalar> values(m.size());
  for (PointId p = 0; p < m.size(); ++p) {
    std::optional<Scalar> best;
    for (int i = 0; i < solver.node_count(); ++i) {
      Scalar cand = pot[i] + m.dist(solver.node(i), p);
      if (!best || cand < *best) best = cand;
    }
    values[p] = *best;
  }
  cert.witness = finish_witness(m, std::move(values));

  if (m.mode() == NumMode::Exact) {
    if (cert.witness.evaluate(mu) != cert.value)
      throw std::logic_error("duality gap in exact KR solve");
  }
  return cert;
}

Scalar lip_constant(const PointedMetricSpace& m,
                    const std::vector<Scalar>& f) {
  if (static_cast<int>(f.size()) != m.size())
    throw DomainError("InvalidWitnessValues",
                      "function must assign a value to every point");
  Scalar best = Scalar::zero(m.mode());
  for (int a = 0; a < m.size(); ++a)
    for (int b = a + 1; b < m.size(); ++b)
      best = max(best, lip_between(m, f[a], f[b], a, b));
  return best;
}

LipschitzWitness mcshane_extend(const PointedMetricSpace& m, const Subset& n,
                                const std::map<PointId, Scalar>& f,
                                const Scalar& lip_bound, ExtendSide side) {
  if (!n.contains(m.base()))
    throw DomainError("BaseNotInSubset", "extension subset must contain base");
  require_values_match(n, f);
  if (!f.at(m.base()).is_zero())
    throw DomainError("BaseValueNonzero", "value at the base must be 0");
  if (lip_bound.is_negative())
    throw DomainError("InvalidLipschitzBound",
                      "Lipschitz bound must be nonnegative");
  require_lipschitz_on(m, n, f, lip_bound);

  std::vector<Scalar> values(m.size());
  for (PointId p = 0; p < m.size(); ++p) {
    std::optional<Scalar> best;
    for (PointId x : n.ids) {
      Scalar cand = side == ExtendSide::Lower
                        ? f.at(x) + lip_bound * m.dist(x, p)
                        : f.at(x) - lip_bound * m.dist(x, p);
      if (!best || (side == ExtendSide::Lower ? cand < *best : cand > *best))
        best = cand;
    }
    values[p] = *best;
  }
  return finish_witness(m, std::move(values));
}

LipschitzWitness ltp_extend(const PointedMetricSpace& m, const Subset& n,
                            const std::map<PointId, Scalar>& f, PointId u,
                            PointId v, const Scalar& eps) {
  if (u == v)
    throw DomainError("EqualWitnesses", "witness points must differ",
                      {{"u", u}, {"v", v}});
  if (u < 0 || u >= m.size() || v < 0 || v >= m.size())
    throw DomainError("PointOutOfRange", "witness point out of range");
  if (n.contains(u) || n.contains(v))
    throw DomainError("WitnessInSubset",
                      "witness points must lie outside the subset",
                      {{"u", u}, {"v", v}});
  if (!n.contains(m.base()))
    throw DomainError("BaseNotInSubset", "extension subset must contain base");
  require_values_match(n, f);
  if (!f.at(m.base()).is_zero())
    throw DomainError("BaseValueNonzero", "value at the base must be 0");
  if (!eps.is_positive())
    throw DomainError("NonpositiveScale", "eps must be positive");
  const Scalar one = Scalar::one(m.mode());
  require_lipschitz_on(m, n, f, one);

  const Scalar lip = one + eps;
  std::optional<Scalar> fu;
  for (PointId x : n.ids) {
    Scalar cand = f.at(x) + lip * m.dist(x, u);
    if (!fu || cand < *fu) fu = cand;
  }
  std::optional<Scalar> fv;
  for (PointId x : n.ids) {
    Scalar cand = f.at(x) - lip * m.dist(x, v);
    if (!fv || cand > *fv) fv = cand;
  }
  {
    Scalar cand = *fu - lip * m.dist(u, v);
    if (cand > *fv) fv = cand;
  }

  std::map<PointId, Scalar> g = f;
  g.emplace(u, *fu);
  g.emplace(v, *fv);
  Subset extended = n;
  extended.ids.push_back(u);
  extended.ids.push_back(v);
  return mcshane_extend(m, extended, g, lip, ExtendSide::Lower);
}

}  // namespace freelip
