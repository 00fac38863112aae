#include <gtest/gtest.h>

#include "bltk/errors.hpp"
#include "bltk/metric.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace bltk;
using oracle::Fam;
using testing_support::kind_of;
using testing_support::uv;

namespace {

const SAlgebra L(NormKind::Lukasiewicz), G(NormKind::Goedel), P(NormKind::Product);

}  // namespace

TEST(Metric, PrintedExamples) {
  EXPECT_EQ(d_star(L, uv("0.3"), uv("0.7")), uv("0.4"));
  EXPECT_EQ(d_star(G, uv("0.3"), uv("0.7")), uv("0.7"));
  EXPECT_EQ(d_star(P, uv("1/4"), uv("3/4")), uv("2/3"));
  for (const auto* alg : {&L, &G, &P})
    for (const auto& a : grid(8).points()) EXPECT_EQ(d_star(*alg, a, a), UnitValue::zero());
}

TEST(Metric, DefinitionMatchesPrintedTableAndSearchedResidua) {
  const long n = 12;
  const auto den = oracle::residuum_denominator(n);
  const auto pts = grid(n).points();
  for (Fam f : oracle::kContinuous) {
    const SAlgebra alg(kind_of(f));
    for (const auto& a : pts)
      for (const auto& b : pts) {
        const auto d = d_star(alg, a, b).rational();
        EXPECT_EQ(d, oracle::table_distance(f, a.rational(), b.rational()));
        EXPECT_EQ(d, oracle::distance(f, a.rational(), b.rational(), den));
        EXPECT_EQ(d_star_closed_form(kind_of(f), a, b).rational(), d);
      }
  }
}

TEST(Metric, ClosedFormCheckOnDenominator64) {
  for (const auto* alg : {&L, &G, &P}) {
    const LawResult r = d_star_closed_form_check(*alg, grid(64));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checked, 65u * 65);
  }
}

TEST(Metric, AxiomsOnDenominator16) {
  for (const auto* alg : {&L, &G, &P}) {
    const Report r = metric_axioms_check(*alg, grid(16));
    EXPECT_TRUE(all_passed(r)) << to_text(r);
    for (const char* law : {"identity", "symmetry", "star-triangle", "numeric-triangle"}) {
      ASSERT_NE(find_law(r, law), nullptr) << law;
      EXPECT_EQ(find_law(r, law)->status, LawStatus::Pass) << law;
    }
  }
}

TEST(Metric, PairMetricExamples) {
  EXPECT_EQ(d_bigstar(L, {uv("0.3"), uv("0.5")}, {uv("0.7"), uv("0.6")}), uv("0.5"));
  EXPECT_EQ(d_bigstar(G, {uv("0.3"), uv("0.5")}, {uv("0.7"), uv("0.5")}), uv("0.7"));
  EXPECT_EQ(d_bigstar(P, {uv("0.3"), uv("0.5")}, {uv("0.3"), uv("0.5")}), UnitValue::zero());
  for (const auto* alg : {&L, &G, &P}) EXPECT_TRUE(all_passed(pair_metric_axioms_check(*alg, grid(3))));
}

TEST(Metric, ContinuityInequalities) {
  for (const auto* alg : {&L, &G, &P}) {
    const Report r = continuity_inequalities_check(*alg, grid(6));
    EXPECT_TRUE(all_passed(r)) << to_text(r);
    for (const char* law : {"star-lipschitz", "arrow-lipschitz", "z1", "z2", "z3"}) {
      ASSERT_NE(find_law(r, law), nullptr) << law;
      EXPECT_EQ(find_law(r, law)->checked, 7u * 7 * 7 * 7);
    }
  }
}

TEST(Metric, ContinuityAgainstOracleDistances) {
  // d(a1*a2, b1*b2) <= d(a1,b1) * d(a2,b2), recomputed test-side.
  const auto pts = oracle::grid(5);
  for (Fam f : oracle::kContinuous)
    for (const auto& a1 : pts)
      for (const auto& a2 : pts)
        for (const auto& b1 : pts)
          for (const auto& b2 : pts) {
            const auto bound = oracle::s_norm(f, oracle::distance(f, a1, b1), oracle::distance(f, a2, b2));
            EXPECT_LE(oracle::distance(f, oracle::s_norm(f, a1, a2), oracle::s_norm(f, b1, b2)), bound);
          }
}

TEST(Metric, DblSuitesOnDenominator8) {
  for (const auto* alg : {&L, &G, &P}) {
    const Report ax = dbl_axioms_check(*alg, grid(8));
    const Report laws = dbl_laws_check(*alg, grid(8));
    EXPECT_TRUE(all_passed(ax)) << to_text(ax);
    EXPECT_TRUE(all_passed(laws)) << to_text(laws);
    EXPECT_EQ(ax.size(), 5u);
    EXPECT_EQ(laws.size(), 15u);
  }
  EXPECT_EQ(L.star(UnitValue::zero(), UnitValue::one()), UnitValue::one());
  EXPECT_EQ(L.arrow(uv("0.7"), uv("0.3")), UnitValue::zero());
}

TEST(Metric, DrasticIsRejected) {
  EXPECT_THROW(SAlgebra(NormKind::Drastic), Error);
}
