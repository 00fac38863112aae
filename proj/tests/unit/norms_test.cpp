#include <gtest/gtest.h>

#include "bltk/errors.hpp"
#include "bltk/norms.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace bltk;
using oracle::Fam;
using testing_support::kind_of;
using testing_support::uv;

TEST(Norms, PrintedClosedFormValues) {
  EXPECT_EQ(apply_norm(s_norm(NormKind::Lukasiewicz), uv("0.3"), uv("0.8")), UnitValue::one());
  EXPECT_EQ(apply_norm(s_norm(NormKind::Product), uv("1/2"), uv("1/2")), uv("3/4"));
  EXPECT_EQ(apply_norm(t_norm(NormKind::Lukasiewicz), uv("0.7"), uv("0.2")), UnitValue::zero());
  EXPECT_EQ(apply_norm(t_norm(NormKind::Product), uv("1/2"), uv("1/3")), uv("1/6"));
  EXPECT_EQ(apply_norm(t_norm(NormKind::Goedel), uv("1/2"), uv("1/3")), uv("1/3"));
  for (const auto& x : grid(16).points())
    EXPECT_EQ(apply_norm(s_norm(NormKind::Goedel), x, UnitValue::zero()), x);
}

TEST(Norms, DrasticUsesTheStandardOtherwiseBranch) {
  // S_d is 1 off the axes; the value 0 there would break duality with T_d
  // and the chain S_L <= S_d.
  EXPECT_EQ(apply_norm(s_norm(NormKind::Drastic), uv("1/4"), uv("1/3")), UnitValue::one());
  EXPECT_EQ(apply_norm(s_norm(NormKind::Drastic), uv("0"), uv("1/3")), uv("1/3"));
  EXPECT_EQ(apply_norm(t_norm(NormKind::Drastic), uv("1/4"), uv("1/3")), UnitValue::zero());
  EXPECT_EQ(apply_norm(t_norm(NormKind::Drastic), uv("1"), uv("1/3")), uv("1/3"));
  EXPECT_TRUE(dual_check(s_norm(NormKind::Drastic), uv("1/4"), uv("1/3")));
}

TEST(Norms, MatchOracleOnGrid) {
  const auto pts = grid(12).points();
  for (Fam f : {Fam::Lukasiewicz, Fam::Goedel, Fam::Product, Fam::Drastic})
    for (const auto& x : pts)
      for (const auto& y : pts) {
        EXPECT_EQ(apply_norm(t_norm(kind_of(f)), x, y).rational(), oracle::t_norm(f, x.rational(), y.rational()));
        EXPECT_EQ(apply_norm(s_norm(kind_of(f)), x, y).rational(), oracle::s_norm(f, x.rational(), y.rational()));
      }
}

TEST(Norms, DualityExamples) {
  EXPECT_TRUE(dual_check(s_norm(NormKind::Lukasiewicz), uv("0.3"), uv("0.8")));
  EXPECT_TRUE(dual_check(s_norm(NormKind::Product), uv("1/2"), uv("1/2")));
  for (const auto& x : grid(16).points()) EXPECT_TRUE(dual_check(s_norm(NormKind::Goedel), x, x));
  EXPECT_EQ(dualize(t_norm(NormKind::Product)), s_norm(NormKind::Product));
  EXPECT_EQ(dualize(dualize(s_norm(NormKind::Drastic))), s_norm(NormKind::Drastic));
}

TEST(Norms, ResiduumExamples) {
  const auto RL = s_norm(NormKind::Lukasiewicz), RG = s_norm(NormKind::Goedel), RP = s_norm(NormKind::Product);
  EXPECT_EQ(residuum(RL, uv("0.3"), uv("0.7")), uv("0.4"));
  EXPECT_EQ(residuum(RG, uv("0.7"), uv("0.3")), UnitValue::zero());
  EXPECT_EQ(residuum(RP, uv("1/2"), uv("3/4")), uv("1/2"));
  EXPECT_EQ(residuum(t_norm(NormKind::Lukasiewicz), uv("0.8"), uv("0.3")), uv("1/2"));
  EXPECT_EQ(residuum(t_norm(NormKind::Product), uv("4/5"), uv("3/10")), uv("3/8"));
  EXPECT_EQ(residuum(t_norm(NormKind::Goedel), uv("4/5"), uv("3/10")), uv("3/10"));
  EXPECT_EQ(residuum(t_norm(NormKind::Goedel), uv("3/10"), uv("4/5")), UnitValue::one());
}

TEST(Norms, ResiduaMatchPrintedTableAndSearchOracle) {
  const long n = 10;
  const auto den = oracle::residuum_denominator(n);
  const auto pts = grid(n).points();
  for (Fam f : oracle::kContinuous)
    for (const auto& x : pts)
      for (const auto& y : pts) {
        const auto s = residuum(s_norm(kind_of(f)), x, y).rational();
        EXPECT_EQ(s, oracle::table_residuum(f, x.rational(), y.rational()));
        EXPECT_EQ(s, oracle::s_residuum(f, x.rational(), y.rational(), den));
        EXPECT_EQ(residuum(t_norm(kind_of(f)), x, y).rational(),
                  oracle::t_residuum(f, x.rational(), y.rational(), den));
      }
}

TEST(Norms, ResiduumOracleExamples) {
  EXPECT_EQ(residuum_oracle(s_norm(NormKind::Lukasiewicz), uv("0.3"), uv("0.7"), grid(10)), uv("0.4"));
  EXPECT_EQ(residuum_oracle(s_norm(NormKind::Goedel), uv("0.7"), uv("0.3"), grid(3)), UnitValue::zero());
  EXPECT_EQ(residuum_oracle(s_norm(NormKind::Product), uv("1/2"), uv("3/4"), grid(4)), uv("1/2"));
}

TEST(Norms, OracleGridRefinementCoversOffGridAnswers) {
  // (y - x) / (1 - x) = 1/4 at x = 1/3, y = 1/2: its denominator divides none of
  // den x, den (1 - x), den (y - x), so the scanned grid must be finer.
  const auto x = uv("1/3"), y = uv("1/2");
  EXPECT_EQ(oracle_denominator(x, y, grid(2)) % 4, 0);
  EXPECT_EQ(residuum_oracle(s_norm(NormKind::Product), x, y, grid(2)), uv("1/4"));
  EXPECT_EQ(residuum_oracle(t_norm(NormKind::Product), uv("3/5"), uv("1/5"), grid(2)), uv("1/3"));
}

TEST(Norms, DrasticHasNoResiduum) {
  try {
    residuum(s_norm(NormKind::Drastic), uv("1/2"), uv("1/3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DrasticNotResiduated);
  }
  EXPECT_THROW(residuum_oracle(t_norm(NormKind::Drastic), uv("1/2"), uv("1/3")), Error);
  EXPECT_THROW(adjointness_check(t_norm(NormKind::Drastic), grid(4)), Error);
}

TEST(Norms, AxiomsHoldForEveryFamily) {
  for (NormKind k : kAllKinds)
    for (NormFamily f : {t_norm(k), s_norm(k)}) {
      const Report r = norm_axioms_check(f, grid(12));
      EXPECT_TRUE(all_passed(r)) << to_string(f) << "\n" << to_text(r);
      ASSERT_NE(find_law(r, "associative"), nullptr);
      EXPECT_EQ(find_law(r, "associative")->checked, 13u * 13 * 13);
      EXPECT_TRUE(duality_check(f, grid(16)).passed());
    }
}

TEST(Norms, AdjointnessOnDenominator16) {
  for (NormKind k : kContinuousKinds)
    for (NormFamily f : {t_norm(k), s_norm(k)}) {
      const LawResult r = adjointness_check(f, grid(16));
      EXPECT_TRUE(r.passed()) << to_string(f);
      EXPECT_EQ(r.checked, 17u * 17 * 17);
      EXPECT_TRUE(residuum_oracle_check(f, grid(16)).passed()) << to_string(f);
    }
}

TEST(Norms, OrderingChains) {
  const Report r = ordering_check(grid(16));
  EXPECT_TRUE(all_passed(r)) << to_text(r);
  const auto pts = grid(8).points();
  EXPECT_TRUE(weaker_than(t_norm(NormKind::Drastic), t_norm(NormKind::Lukasiewicz), pts));
  EXPECT_TRUE(weaker_than(s_norm(NormKind::Lukasiewicz), s_norm(NormKind::Drastic), pts));
  EXPECT_FALSE(weaker_than(t_norm(NormKind::Goedel), t_norm(NormKind::Product), pts));
}

TEST(Norms, NamesRoundTrip) {
  EXPECT_EQ(to_string(s_norm(NormKind::Lukasiewicz)), "S_L");
  EXPECT_EQ(to_string(t_norm(NormKind::Product)), "T_pi");
  EXPECT_EQ(parse_norm_kind("Goedel"), NormKind::Goedel);
  EXPECT_EQ(parse_norm_kind("godel"), NormKind::Goedel);
  EXPECT_FALSE(parse_norm_kind("hamacher").has_value());
}
