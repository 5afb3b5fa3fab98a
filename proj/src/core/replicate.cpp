#include "core/replicate.hpp"

#include <cmath>
#include <sstream>

#include "core/gallery.hpp"
#include "core/ltp.hpp"
#include "core/octa.hpp"
#include "core/transport.hpp"

namespace freelip {

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

struct Runner {
  std::vector<ReplicationRow> rows;
  int jobs;

  void check(const std::string& name, bool pass, const std::string& detail) {
    rows.push_back({name, pass, detail});
  }
};

void ejenega_modulus(Runner& r) {
  PointedMetricSpace m = gen_ejenega(10);
  Scalar mod = ltp_modulus(m, Subset{{0, 11}}, r.jobs);
  r.check("ejenega-modulus", mod == q(1, 3), "modulus(N={0,z}) = " + mod.str() +
                                                 ", expected 1/3");
}

void ejenega_profile(Runner& r) {
  PointedMetricSpace m = gen_ejenega(6);
  bool ok = true;
  std::string bad;
  for (const auto& e : all_pairs_profile(m, r.jobs)) {
    bool is_base_z = e.subset.first == 0 && e.subset.second == m.size() - 1;
    Scalar expect = is_base_z ? q(1, 3) : q(0);
    if (e.modulus != expect) {
      ok = false;
      bad = "{" + std::to_string(e.subset.first) + "," +
            std::to_string(e.subset.second) + "} -> " + e.modulus.str();
      break;
    }
  }
  r.check("ejenega-profile", ok,
          ok ? "only {0,z} has nonzero modulus" : "unexpected " + bad);
}

void ellp_distortions(Runner& r) {
  for (double p : {1.5, 2.0, 3.0, 10.0}) {
    auto [config, bij] = gen_ellp_embed(p, 8);
    double got = distortion(bij).distortion.to_double();
    double want = ellp_distortion_formula(p);
    bool ok = std::fabs(got - want) <= 1e-9 && got < 2.0;
    std::ostringstream detail;
    detail << "p=" << p << ": distortion " << got << " vs formula " << want;
    r.check("ellp-distortion-p" + std::to_string(p).substr(0, 4), ok,
            detail.str());

    Scalar mod = ltp_modulus(config.space, Subset{{0, 1}}, r.jobs);
    r.check("ellp-image-ltp-p" + std::to_string(p).substr(0, 4),
            mod.to_double() > 1e-9,
            "image modulus(N={0,z}) = " + std::to_string(mod.to_double()));
  }
}

void graph_vs_equilateral(Runner& r) {
  Bijection bij = Bijection::make(gen_graph_m(8), gen_equilateral(10, q(1)),
                                  {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  Scalar d = distortion(bij).distortion;
  r.check("graph-m-vs-equilateral", d == q(2),
          "distortion = " + d.str() + ", expected 2");
}

void chain_ejenega(Runner& r) {
  PointedMetricSpace m = gen_ejenega(4);
  ChainReport rep = chain_check(m, Subset{{0, 5}}, r.jobs);
  bool ok = rep.ltp.ratio == q(2, 3) && rep.oct.index == q(3, 2) && rep.holds;
  r.check("chain-ejenega", ok,
          "R = " + rep.ltp.ratio.str() + ", OCT = " + rep.oct.index.str() +
              ", expected 2/3 and 3/2");
}

void frechet_examples(Runner& r) {
  PointedMetricSpace ej = gen_ejenega(5);
  ConvexMoleculeCombination phi{{6}, {q(1)}, 0};
  DiffReport rep = frechet_check(ej, phi);
  r.check("frechet-ejenega", rep.differentiable,
          rep.differentiable ? "differentiable at delta_z/2"
                             : "unexpected witness");

  PointedMetricSpace fb = gen_four_branch(5);
  ConvexMoleculeCombination phi2{{3}, {q(1)}, 2};  // delta_z / d(z,0)
  DiffReport rep2 = frechet_check(fb, phi2);
  bool ok = !rep2.differentiable && rep2.witness_point == 0;
  if (ok) {
    const auto& [f1, f2] = *rep2.witnesses;
    Measure mu = combination_measure(fb, phi2);
    ok = f1.values[0] == q(1) && f2.values[0] == q(-1) &&
         f1.lip == q(1) && f2.lip == q(1) && f1.evaluate(mu) == q(1) &&
         f2.evaluate(mu) == q(1);
  }
  r.check("frechet-four-branch", ok,
          "witness alpha with f1(alpha)=1, f2(alpha)=-1, both norming");
}

void four_branch_profile(Runner& r) {
  PointedMetricSpace m = gen_four_branch(5);
  bool all_zero = true;
  for (const auto& e : all_pairs_profile(m, r.jobs))
    if (!e.modulus.is_zero()) all_zero = false;
  Scalar whole = ltp_modulus(m, Subset::all(m), r.jobs);
  r.check("four-branch-profile", all_zero && whole.is_positive(),
          "2-point moduli all 0, whole-space modulus = " + whole.str());
}

void ramsey_ejenega(Runner& r) {
  PointedMetricSpace m = gen_ejenega(20);
  RamseyReport rep = ramsey_extract(m, Subset{{0, 21}}, q(1, 5));
  bool ok = rep.excluded_x.size() <= 1 && rep.excluded_y.size() <= 1 &&
            static_cast<int>(rep.extracted.size()) >= m.size() - 2;
  r.check("ramsey-ejenega", ok,
          "|A| = " + std::to_string(rep.extracted.size()) + " of " +
              std::to_string(m.size()));
}

void line_decay(Runner& r) {
  bool ok = true;
  Scalar prev = q(1);
  std::string detail = "moduli";
  for (int k = 1; k <= 12; ++k) {
    PointedMetricSpace m = gen_geometric_line(k);
    Scalar mod = ltp_modulus(m, Subset{{0, 1}}, r.jobs);
    Scalar bound = q(2) / (Scalar::exact(mpq_class(mpz_class(1) << k)) + q(1));
    if (mod > bound || mod > prev) ok = false;
    prev = mod;
  }
  r.check("line-decay", ok, "modulus(N={0,1}) nonincreasing, <= 2/(2^k+1)");
}

void dyadic_decay(Runner& r) {
  bool ok = true;
  Scalar prev = q(1);
  for (int k = 1; k <= 8; ++k) {
    PointedMetricSpace m = gen_dyadic_cluster(k);
    Scalar mod = ltp_modulus(m, Subset{{0, 1}}, r.jobs);
    if (!(mod < prev) || !mod.is_positive()) ok = false;
    prev = mod;
  }
  r.check("dyadic-decay", ok, "cluster modulus strictly decreasing to 0");
}

void tree_cluster(Runner& r) {
  // Spine 0 - g1 - g2 - e with two extra leaves u, v near the middle; the
  // leaf gates sit d(g1,g2) apart inside the hull of N = {0, e}.
  auto build = [](const Scalar& gap) {
    WeightedTree t;
    t.vertex_count = 6;
    t.edges = {{0, 1, q(4)}, {1, 2, gap}, {2, 3, q(4)},
               {1, 4, q(2)}, {2, 5, q(2)}};
    return gen_tree_metric(t, {0, 1, 2, 3, 4, 5});
  };
  PointedMetricSpace t1 = build(q(2));
  PointedMetricSpace t2 = build(q(1, 2));
  Scalar m1 = ltp_modulus(t1, Subset{{0, 3}}, r.jobs);
  Scalar m2 = ltp_modulus(t2, Subset{{0, 3}}, r.jobs);
  // The cluster leaves themselves witness the bound, not just the optimum.
  Scalar c1 = Scalar::one(NumMode::Exact) - pair_ratio(t1, Subset{{0, 3}}, 4, 5);
  Scalar c2 = Scalar::one(NumMode::Exact) - pair_ratio(t2, Subset{{0, 3}}, 4, 5);
  r.check("tree-cluster",
          m1 <= q(1, 4) && m2 <= q(1, 8) && c1 <= q(1, 4) && c2 <= q(1, 8),
          "moduli " + m1.str() + ", " + m2.str() + "; cluster-pair defects " +
              c1.str() + " <= 1/4 and " + c2.str() + " <= 1/8");
}

void molecule_norms(Runner& r) {
  bool ok = true;
  for (const PointedMetricSpace& m :
       {gen_ejenega(4), gen_four_branch(3), gen_equilateral(5, q(1))}) {
    for (PointId u = 0; u < m.size() && ok; ++u)
      for (PointId v = 0; v < m.size() && ok; ++v) {
        if (u == v) continue;
        if (kr_norm(m, molecule_measure(m, {u, v})).value !=
            Scalar::one(m.mode()))
          ok = false;
      }
  }
  r.check("molecule-norms", ok, "every molecule has norm 1");
}

void l1_additivity(Runner& r) {
  PointedMetricSpace t1 = gen_ejenega(3);
  PointedMetricSpace t2 = gen_equilateral(3, q(1));
  PointedMetricSpace m = l1_sum(t1, t2);
  std::map<PointId, Scalar> raw;
  raw.emplace(l1_sum_index(t1, t2, 0, 4), q(1, 2));   // z of the first part
  raw.emplace(l1_sum_index(t1, t2, 0, 1), q(-1));     // x1
  raw.emplace(l1_sum_index(t1, t2, 1, 1), q(2));      // e1 of the second part
  raw.emplace(l1_sum_index(t1, t2, 1, 2), q(-1, 3));  // e2
  Measure mu = canonicalize(m, raw);

  std::map<PointId, PointId> back1, back2;
  std::vector<PointId> keep1, keep2;
  for (PointId p = 0; p < t1.size(); ++p) {
    keep1.push_back(l1_sum_index(t1, t2, 0, p));
    back1[l1_sum_index(t1, t2, 0, p)] = p;
  }
  for (PointId p = 0; p < t2.size(); ++p) {
    keep2.push_back(l1_sum_index(t1, t2, 1, p));
    back2[l1_sum_index(t1, t2, 1, p)] = p;
  }
  Scalar whole = kr_norm(m, mu).value;
  Scalar part1 = kr_norm(t1, measure_project(t1, mu, keep1, back1)).value;
  Scalar part2 = kr_norm(t2, measure_project(t2, mu, keep2, back2)).value;
  r.check("l1-sum-additivity", whole == part1 + part2,
          whole.str() + " = " + part1.str() + " + " + part2.str());
}

}  // namespace

std::vector<ReplicationRow> run_replication(int jobs) {
  Runner r;
  r.jobs = jobs < 1 ? 1 : jobs;
  ejenega_modulus(r);
  ejenega_profile(r);
  ellp_distortions(r);
  graph_vs_equilateral(r);
  chain_ejenega(r);
  frechet_examples(r);
  four_branch_profile(r);
  ramsey_ejenega(r);
  line_decay(r);
  dyadic_decay(r);
  tree_cluster(r);
  molecule_norms(r);
  l1_additivity(r);
  return r.rows;
}

}  // namespace freelip
