#pragma once

#include "core/metric_space.hpp"

namespace freelip {

// Exact-mode space {0, x_1..x_k, z} with d(0,z) = 2 and every other distance
// 1. Its subset {0, z} is the canonical 2-point trapezoid failure.
PointedMetricSpace gen_ejenega(int k);

// Shortest-path metric of the graph on {0, z, x_1..x_k} with unit edges
// {0,x_i} and {x_i,z}: d(0,z) = d(x_i,x_j) = 2, legs 1. Exact mode.
PointedMetricSpace gen_graph_m(int k);

// {alpha, beta, 0, z, x_1..x_k}: every 2-point subset admits trapezoid
// witnesses, the space as a whole does not. Exact mode; base is the point
// named "0" (index 2).
PointedMetricSpace gen_four_branch(int k);

PointedMetricSpace gen_equilateral(int n, const Scalar& c);

// Points 0, 1, 2, 4, ..., 2^k on the line. Exact mode, k >= 1.
PointedMetricSpace gen_geometric_line(int k);

// {0} + {3 + 2^-j : 0 <= j <= k}: a cluster with vanishing separation far
// from the base. Exact mode, k >= 1.
PointedMetricSpace gen_dyadic_cluster(int k);

// A finite weighted tree; vertices 0..vertex_count-1.
struct WeightedTree {
  struct Edge {
    int a, b;
    Scalar w;  // > 0
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
};

// Shortest-path distances between all tree vertices (exact mode).
std::vector<std::vector<Scalar>> tree_distances(const WeightedTree& tree);

// Space over the marked vertices with the tree's path metric; the base is the
// first marked vertex.
PointedMetricSpace gen_tree_metric(const WeightedTree& tree,
                                   const std::vector<int>& marked);

// Nearest vertex of the Steiner hull of `hull_marks` (the union of tree paths
// between them), per tree vertex. In a tree the nearest point is a gate: the
// path from v to any hull vertex passes through it.
std::vector<int> tree_gates(const WeightedTree& tree,
                            const std::vector<int>& hull_marks);

// Point set in the sequence space with exponent p, together with its induced
// float-mode distance space.
struct PointConfiguration {
  double p = 2.0;
  std::vector<std::vector<double>> coords;
  PointedMetricSpace space;
};

struct Bijection {
  PointedMetricSpace source;
  PointedMetricSpace target;
  std::vector<int> map;  // target index per source index

  static Bijection make(PointedMetricSpace source, PointedMetricSpace target,
                        std::vector<int> map);
};

// Bi-Lipschitz distortion of a bijection in scale-invariant product form.
struct DistortionReport {
  Scalar expansion;    // max target/source distance ratio
  Scalar contraction;  // max source/target distance ratio
  Scalar distortion;   // expansion * contraction, >= 1
};

DistortionReport distortion(const Bijection& b);

// The configuration phi(0) = -e_1, phi(z) = e_1, phi(x_i) = 2^((p-1)/p)
// e_{i+1} whose induced space approximates gen_graph_m(k) with distortion
// (1 + 2^(p-1))^(1/p) < 2, plus the identity-order bijection onto the graph.
// 1 < p < infinity; float mode.
std::pair<PointConfiguration, Bijection> gen_ellp_embed(double p, int k);

// Closed form (1 + 2^(p-1))^(1/p); equals 2 at p = 1 and in the p -> infinity
// limit.
double ellp_distortion_formula(double p);

}  // namespace freelip
