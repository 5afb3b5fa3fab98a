#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "core/errors.hpp"
#include "core/gallery.hpp"
#include "core/ltp.hpp"
#include "support/test_support.hpp"

using namespace freelip;
using freelip::testing::q;

TEST_CASE("pair ratio on the failing space") {
  PointedMetricSpace m = gen_ejenega(4);
  PointId z = 5;
  CHECK(pair_ratio(m, Subset{{0, z}}, 1, 2) == q(2, 3));
  CHECK(pair_ratio(m, Subset{{0}}, 1, 2) == q(1));  // vacuous minimum
  CHECK_THROWS_AS(pair_ratio(m, Subset{{0, z}}, 1, 1), DomainError);
}

TEST_CASE("pair ratio is 1 for fresh witnesses in an equilateral space") {
  PointedMetricSpace m = gen_equilateral(5, q(1));
  CHECK(pair_ratio(m, Subset{{0, 1}}, 2, 3) == q(1));
}

TEST_CASE("ltp ratio on the failing space") {
  PointedMetricSpace m = gen_ejenega(10);
  PointId z = 11;
  LtpReport r = ltp_ratio(m, Subset{{0, z}});
  CHECK(r.ratio == q(2, 3));
  CHECK(r.modulus == q(1, 3));
  CHECK(r.witness == std::pair<PointId, PointId>{1, 2});
  REQUIRE(r.worst_pair.has_value());
  CHECK(*r.worst_pair == std::pair<PointId, PointId>{0, z});
}

TEST_CASE("single middle point changes the modulus") {
  PointedMetricSpace m = gen_ejenega(1);  // path 0 - x1 - z
  // Full enumeration over the 6 ordered witness pairs gives 1/3.
  LtpReport r = ltp_ratio(m, Subset{{0, 2}});
  CHECK(r.ratio == q(1, 3));
  CHECK(r.modulus == q(2, 3));
}

TEST_CASE("equilateral two-point subsets have modulus zero") {
  PointedMetricSpace m = gen_equilateral(5, q(7, 2));
  for (const auto& e : all_pairs_profile(m)) CHECK(e.modulus.is_zero());
}

TEST_CASE("geometric line bound and its boundary witness") {
  for (int k = 1; k <= 6; ++k) {
    PointedMetricSpace m = gen_geometric_line(k);
    PointId far = m.size() - 1;
    Scalar at_witness = pair_ratio(m, Subset{{0, 1}}, far, 0);
    Scalar bound = q(2) / (Scalar::exact(mpq_class(mpz_class(1) << k)) + q(1));
    CHECK(Scalar::one(NumMode::Exact) - at_witness == bound);
    CHECK(ltp_modulus(m, Subset{{0, 1}}) <= bound);
  }
}

TEST_CASE("whole space as subset always collapses") {
  // With N = M every witness pair is its own trapezoid, so the ratio is 0.
  PointedMetricSpace m = gen_equilateral(4, q(1));
  LtpReport r = ltp_ratio(m, Subset::all(m));
  CHECK(r.ratio.is_zero());
  CHECK(r.modulus == q(1));
}

TEST_CASE("monotonicity in the subset") {
  freelip::testing::Rng rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    PointedMetricSpace m = rng.space(rng.uniform(3, 8));
    Subset big = rng.subset(m, m.size(), false);
    Subset small = big;
    small.ids.resize(std::max<size_t>(1, big.ids.size() / 2));
    CHECK(ltp_ratio(m, small).ratio >= ltp_ratio(m, big).ratio);
  }
}

TEST_CASE("scale invariance of ratios") {
  freelip::testing::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    PointedMetricSpace m = rng.space(rng.uniform(3, 7));
    Subset n = rng.subset(m, 3, false);
    Scalar s = Scalar::exact(rng.uniform(1, 9), rng.uniform(1, 4));
    PointedMetricSpace scaled = scale_space(m, s);
    LtpReport a = ltp_ratio(m, n);
    LtpReport b = ltp_ratio(scaled, n);
    CHECK(a.ratio == b.ratio);
    CHECK(a.witness == b.witness);
    CHECK(pair_ratio(m, n, a.witness.first, a.witness.second) ==
          pair_ratio(scaled, n, a.witness.first, a.witness.second));
  }
}

TEST_CASE("profile of the failing space") {
  PointedMetricSpace m = gen_ejenega(6);
  PointId z = 7;
  for (const auto& e : all_pairs_profile(m)) {
    if (e.subset == std::pair<PointId, PointId>{0, z})
      CHECK(e.modulus == q(1, 3));
    else
      CHECK(e.modulus.is_zero());
  }
}

TEST_CASE("parallel search is deterministic") {
  PointedMetricSpace m = gen_four_branch(6);
  Subset n{{2, 3, 0}};
  LtpReport a = ltp_ratio(m, n, 1);
  LtpReport b = ltp_ratio(m, n, 4);
  CHECK(a.ratio == b.ratio);
  CHECK(a.witness == b.witness);
  CHECK(a.worst_pair == b.worst_pair);
}

TEST_CASE("ramsey extraction on the failing space") {
  PointedMetricSpace m = gen_ejenega(20);
  PointId z = 21;
  RamseyReport r = ramsey_extract(m, Subset{{0, z}}, q(1, 5));
  CHECK(r.pair == std::pair<PointId, PointId>{0, z});
  CHECK(r.excluded_x.empty());
  CHECK(r.excluded_y.empty());
  CHECK(static_cast<int>(r.extracted.size()) == m.size());

  // Invariant re-checked here by enumeration.
  Scalar level = q(4, 5);
  for (size_t a = 0; a < r.extracted.size(); ++a)
    for (size_t b = a + 1; b < r.extracted.size(); ++b) {
      PointId u = r.extracted[a], v = r.extracted[b];
      Scalar lhs = level * (m.dist(0, z) + m.dist(u, v));
      Scalar rhs = min(m.dist(0, u) + m.dist(z, v),
                       m.dist(0, v) + m.dist(z, u));
      CHECK(lhs > rhs);
    }
}

TEST_CASE("ramsey hypothesis failure is reported with a witness") {
  PointedMetricSpace m = gen_equilateral(6, q(1));
  try {
    ramsey_extract(m, Subset{{0, 1}}, q(1, 5));
    FAIL("expected HypothesisFails");
  } catch (const DomainError& e) {
    CHECK(e.code() == "HypothesisFails");
    PointId u = e.details().at("u").get<PointId>();
    PointId v = e.details().at("v").get<PointId>();
    CHECK(pair_ratio(m, Subset{{0, 1}}, u, v) >= q(4, 5));
  }
}

TEST_CASE("ramsey exclusion sets stay small") {
  // Tailored space: a failing core plus one point that pairs correctly
  // with one side; the proof bounds each exclusion set by a singleton.
  freelip::testing::Rng rng(44);
  int ran = 0;
  for (int trial = 0; trial < 400 && ran < 25; ++trial) {
    PointedMetricSpace m = rng.space(rng.uniform(4, 8));
    Subset n = rng.subset(m, 2, false);
    for (int e = 2; e <= 4; ++e) {
      try {
        RamseyReport r = ramsey_extract(m, n, q(1, e));
        ++ran;
        CHECK(r.excluded_x.size() <= 1);
        CHECK(r.excluded_y.size() <= 1);
      } catch (const DomainError&) {
        // hypothesis fails for this level; fine
      }
    }
  }
}

TEST_CASE("too-few-point guards") {
  PointedMetricSpace m = gen_ejenega(2);
  CHECK_THROWS_AS(ramsey_extract(m, Subset{{0}}, q(1, 5)), DomainError);
  CHECK_THROWS_AS(ramsey_extract(m, Subset{{0, 3}}, q(2)), DomainError);
  PointedMetricSpace single =
      validate_metric({{Scalar::exact(0)}}, 0);
  CHECK_THROWS_AS(ltp_ratio(single, Subset{{0}}), DomainError);
  CHECK_THROWS_AS(all_pairs_profile(single), DomainError);
}
