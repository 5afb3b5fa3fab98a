#include "core/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "core/errors.hpp"

namespace freelip {

namespace {

PointedMetricSpace build_exact(const std::vector<std::vector<Scalar>>& d,
                               PointId base, std::vector<std::string> names) {
  return validate_metric(d, base, std::move(names));
}

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

}  // namespace

PointedMetricSpace gen_ejenega(int k) {
  if (k < 1) throw DomainError("ZeroCount", "need at least one middle point");
  int n = k + 2;
  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n, q(1)));
  std::vector<std::string> names(n);
  names[0] = "0";
  names[n - 1] = "z";
  for (int i = 1; i <= k; ++i) names[i] = "x" + std::to_string(i);
  for (int i = 0; i < n; ++i) d[i][i] = q(0);
  d[0][n - 1] = d[n - 1][0] = q(2);
  return build_exact(d, 0, std::move(names));
}

PointedMetricSpace gen_graph_m(int k) {
  if (k < 2) throw DomainError("ZeroCount", "need at least two middle points");
  int n = k + 2;  // order: 0, z, x_1..x_k
  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n, q(2)));
  std::vector<std::string> names(n);
  names[0] = "0";
  names[1] = "z";
  for (int i = 2; i < n; ++i) names[i] = "x" + std::to_string(i - 1);
  for (int i = 0; i < n; ++i) d[i][i] = q(0);
  for (int i = 2; i < n; ++i) {
    d[0][i] = d[i][0] = q(1);
    d[1][i] = d[i][1] = q(1);
  }
  return build_exact(d, 0, std::move(names));
}

PointedMetricSpace gen_four_branch(int k) {
  if (k < 2) throw DomainError("ZeroCount", "need at least two middle points");
  int n = k + 4;  // order: alpha, beta, 0, z, x_1..x_k
  const int A = 0, B = 1, O = 2, Z = 3;
  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n, q(1)));
  std::vector<std::string> names(n);
  names[A] = "alpha";
  names[B] = "beta";
  names[O] = "0";
  names[Z] = "z";
  for (int i = 4; i < n; ++i) names[i] = "x" + std::to_string(i - 3);
  for (int i = 0; i < n; ++i) d[i][i] = q(0);
  auto set = [&](int a, int b, Scalar v) { d[a][b] = d[b][a] = v; };
  set(O, Z, q(2));
  set(A, B, q(2));
  set(A, Z, q(3));
  set(B, Z, q(3));
  for (int i = 4; i < n; ++i) {
    set(A, i, q(2));
    set(B, i, q(2));
  }
  return build_exact(d, O, std::move(names));
}

PointedMetricSpace gen_equilateral(int n, const Scalar& c) {
  if (n < 2) throw DomainError("ZeroCount", "need at least two points");
  if (!c.is_positive())
    throw DomainError("NonpositiveScale", "side length must be positive");
  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n, c));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    d[i][i] = Scalar::zero(c.mode());
    names[i] = "e" + std::to_string(i);
  }
  return validate_metric(d, 0, std::move(names));
}

PointedMetricSpace gen_geometric_line(int k) {
  if (k < 1) throw DomainError("ZeroCount", "need k >= 1");
  std::vector<Scalar> vals{q(0)};
  for (int j = 0; j <= k; ++j)
    vals.push_back(Scalar::exact(mpq_class(mpz_class(1) << j)));
  int n = static_cast<int>(vals.size());
  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = vals[i].str();
    for (int j = 0; j < n; ++j) d[i][j] = (vals[i] - vals[j]).abs();
  }
  return build_exact(d, 0, std::move(names));
}

PointedMetricSpace gen_dyadic_cluster(int k) {
  if (k < 1) throw DomainError("ZeroCount", "need k >= 1");
  std::vector<Scalar> vals{q(0)};
  for (int j = 0; j <= k; ++j)
    vals.push_back(q(3) + Scalar::exact(mpq_class(1, mpz_class(1) << j)));
  int n = static_cast<int>(vals.size());
  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = vals[i].str();
    for (int j = 0; j < n; ++j) d[i][j] = (vals[i] - vals[j]).abs();
  }
  return build_exact(d, 0, std::move(names));
}

std::vector<std::vector<Scalar>> tree_distances(const WeightedTree& tree) {
  int n = tree.vertex_count;
  if (n < 1) throw DomainError("ZeroCount", "tree needs vertices");
  if (static_cast<int>(tree.edges.size()) != n - 1)
    throw DomainError("InvalidTree", "a tree on n vertices has n-1 edges");
  std::vector<std::vector<std::pair<int, Scalar>>> adj(n);
  for (const auto& e : tree.edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || e.a == e.b)
      throw DomainError("InvalidTree", "bad edge endpoints",
                        {{"a", e.a}, {"b", e.b}});
    if (!e.w.is_positive())
      throw DomainError("InvalidTree", "edge weights must be positive");
    adj[e.a].emplace_back(e.b, e.w);
    adj[e.b].emplace_back(e.a, e.w);
  }
  NumMode mode = tree.edges.empty() ? NumMode::Exact : tree.edges[0].w.mode();
  std::vector<std::vector<Scalar>> d(
      n, std::vector<Scalar>(n, Scalar::zero(mode)));
  for (int s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [y, w] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        d[s][y] = d[s][x] + w;
        stack.push_back(y);
      }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v])
        throw DomainError("InvalidTree", "tree is not connected",
                          {{"vertex", v}});
  }
  return d;
}

PointedMetricSpace gen_tree_metric(const WeightedTree& tree,
                                   const std::vector<int>& marked) {
  if (marked.empty())
    throw DomainError("ZeroCount", "need at least one marked vertex");
  auto dist = tree_distances(tree);
  int k = static_cast<int>(marked.size());
  std::vector<std::vector<Scalar>> d(k, std::vector<Scalar>(k));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    int vi = marked[i];
    if (vi < 0 || vi >= tree.vertex_count)
      throw DomainError("PointOutOfRange", "marked vertex out of range",
                        {{"vertex", vi}});
    names[i] = "v" + std::to_string(vi);
    for (int j = 0; j < k; ++j) d[i][j] = dist[vi][marked[j]];
  }
  return validate_metric(d, 0, std::move(names));
}

std::vector<int> tree_gates(const WeightedTree& tree,
                            const std::vector<int>& hull_marks) {
  if (hull_marks.empty())
    throw DomainError("ZeroCount", "hull needs at least one vertex");
  auto dist = tree_distances(tree);
  int n = tree.vertex_count;
  // Hull membership: v lies on the path between marks a,b iff
  // d(a,v) + d(v,b) = d(a,b).
  std::vector<bool> in_hull(n, false);
  for (int v = 0; v < n; ++v)
    for (size_t i = 0; i < hull_marks.size() && !in_hull[v]; ++i)
      for (size_t j = 0; j < hull_marks.size(); ++j)
        if (dist[hull_marks[i]][v] + dist[v][hull_marks[j]] ==
            dist[hull_marks[i]][hull_marks[j]]) {
          in_hull[v] = true;
          break;
        }
  std::vector<int> gate(n, -1);
  for (int v = 0; v < n; ++v) {
    std::optional<Scalar> best;
    for (int h = 0; h < n; ++h) {
      if (!in_hull[h]) continue;
      if (!best || dist[v][h] < *best) {
        best = dist[v][h];
        gate[v] = h;
      }
    }
  }
  return gate;
}

Bijection Bijection::make(PointedMetricSpace source, PointedMetricSpace target,
                          std::vector<int> map) {
  if (source.size() != target.size() ||
      static_cast<int>(map.size()) != source.size())
    throw DomainError("SizeMismatch",
                      "bijection requires spaces of equal size",
                      {{"source", source.size()}, {"target", target.size()}});
  std::vector<bool> hit(map.size(), false);
  for (int t : map) {
    if (t < 0 || t >= target.size() || hit[t])
      throw DomainError("SizeMismatch", "index map is not a bijection");
    hit[t] = true;
  }
  return Bijection{std::move(source), std::move(target), std::move(map)};
}

DistortionReport distortion(const Bijection& b) {
  const auto& s = b.source;
  const auto& t = b.target;
  if (s.size() < 2)
    throw DomainError("TooFewPoints", "distortion needs at least two points");

  // Ratios are exact only when both sides are exact; otherwise binary64.
  bool exact = s.mode() == NumMode::Exact && t.mode() == NumMode::Exact;
  auto as_ratio = [&](const Scalar& num, const Scalar& den) {
    if (exact) return num / den;
    return Scalar::real(num.to_double() / den.to_double());
  };
  std::optional<Scalar> expansion, contraction;
  for (int a = 0; a < s.size(); ++a)
    for (int bb = a + 1; bb < s.size(); ++bb) {
      const Scalar& ds = s.dist(a, bb);
      const Scalar& dt = t.dist(b.map[a], b.map[bb]);
      Scalar up = as_ratio(dt, ds);
      Scalar down = as_ratio(ds, dt);
      if (!expansion || up > *expansion) expansion = up;
      if (!contraction || down > *contraction) contraction = down;
    }
  DistortionReport r;
  r.expansion = *expansion;
  r.contraction = *contraction;
  r.distortion = *expansion * *contraction;
  return r;
}

double ellp_distortion_formula(double p) {
  return std::pow(1.0 + std::pow(2.0, p - 1.0), 1.0 / p);
}

std::pair<PointConfiguration, Bijection> gen_ellp_embed(double p, int k) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw DomainError("BadExponent", "exponent must satisfy 1 < p < infinity",
                      {{"p", p}});
  if (k < 2) throw DomainError("ZeroCount", "need at least two middle points");
  PointedMetricSpace graph = gen_graph_m(k);
  int n = k + 2;
  int dim = k + 1;
  PointConfiguration config;
  config.p = p;
  config.coords.assign(n, std::vector<double>(dim, 0.0));
  config.coords[0][0] = -1.0;  // phi(0)
  config.coords[1][0] = 1.0;   // phi(z)
  double height = std::pow(2.0, (p - 1.0) / p);
  for (int i = 0; i < k; ++i) config.coords[2 + i][1 + i] = height;

  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double acc = 0.0;
      for (int c = 0; c < dim; ++c)
        acc += std::pow(std::fabs(config.coords[a][c] - config.coords[b][c]),
                        p);
      d[a][b] = Scalar::real(std::pow(acc, 1.0 / p));
    }
  config.space = validate_metric(d, 0, graph.names());

  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  Bijection bij = Bijection::make(config.space, graph, std::move(identity));
  return {std::move(config), std::move(bij)};
}

}  // namespace freelip
