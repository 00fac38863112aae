// Randomised checks off the grid: arbitrary denominators, random formulas,
// chains of every small size. Seeds are fixed so failures reproduce.

#include <gtest/gtest.h>

#include <random>

#include "bltk/evaluate.hpp"
#include "bltk/fixtures.hpp"
#include "bltk/interval_ball.hpp"
#include "bltk/metric.hpp"
#include "bltk/topology.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace bltk;
using oracle::Fam;
using testing_support::kind_of;

namespace {

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  UnitValue unit() {
    const long den = std::uniform_int_distribution<long>(1, 997)(gen_);
    const long num = std::uniform_int_distribution<long>(0, den)(gen_);
    return UnitValue(num, static_cast<unsigned long>(den));
  }
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen_); }

 private:
  std::mt19937 gen_;
};

Formula random_formula(Rng& rng, int depth) {
  static const char* names[] = {"p", "q", "r", "s1"};
  if (depth == 0 || rng.below(4) == 0) {
    const int k = rng.below(6);
    if (k == 4) return Formula::bottom();
    if (k == 5) return Formula::top();
    return Formula::atom(names[k]);
  }
  auto sub = [&] { return random_formula(rng, depth - 1); };
  switch (rng.below(6)) {
    case 0: return Formula::conj(sub(), sub());
    case 1: return Formula::impl(sub(), sub());
    case 2: return Formula::neg(sub());
    case 3: return Formula::meet(sub(), sub());
    case 4: return Formula::join(sub(), sub());
    default: return Formula::iff(sub(), sub());
  }
}

}  // namespace

TEST(Properties, NormsMatchOracleOffGrid) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto x = rng.unit(), y = rng.unit();
    for (Fam f : {Fam::Lukasiewicz, Fam::Goedel, Fam::Product, Fam::Drastic}) {
      EXPECT_EQ(apply_norm(t_norm(kind_of(f)), x, y).rational(), oracle::t_norm(f, x.rational(), y.rational()));
      EXPECT_EQ(apply_norm(s_norm(kind_of(f)), x, y).rational(), oracle::s_norm(f, x.rational(), y.rational()));
      EXPECT_TRUE(dual_check(t_norm(kind_of(f)), x, y));
    }
  }
}

TEST(Properties, NormAxiomsOffGrid) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto x = rng.unit(), y = rng.unit(), z = rng.unit();
    for (NormKind k : kAllKinds)
      for (NormFamily f : {t_norm(k), s_norm(k)}) {
        EXPECT_EQ(apply_norm(f, apply_norm(f, x, y), z), apply_norm(f, x, apply_norm(f, y, z)));
        EXPECT_EQ(apply_norm(f, x, y), apply_norm(f, y, x));
        if (x <= y) {
          EXPECT_LE(apply_norm(f, x, z), apply_norm(f, y, z));
        }
      }
  }
}

TEST(Properties, AdjunctionOffGrid) {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const auto a = rng.unit(), b = rng.unit(), c = rng.unit();
    for (NormKind k : kContinuousKinds) {
      const auto S = s_norm(k), T = t_norm(k);
      EXPECT_EQ(a >= residuum(S, b, c), apply_norm(S, a, b) >= c);
      EXPECT_EQ(a <= residuum(T, b, c), apply_norm(T, a, b) <= c);
    }
  }
}

TEST(Properties, ResiduumOracleOffGrid) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto x = rng.unit(), y = rng.unit();
    for (NormKind k : kContinuousKinds) {
      EXPECT_EQ(residuum_oracle(s_norm(k), x, y, grid(3)), residuum(s_norm(k), x, y));
      EXPECT_EQ(residuum_oracle(t_norm(k), x, y, grid(3)), residuum(t_norm(k), x, y));
    }
  }
}

TEST(Properties, MetricOffGrid) {
  Rng rng(19);
  for (int i = 0; i < 1000; ++i) {
    const auto a = rng.unit(), b = rng.unit(), c = rng.unit();
    for (Fam f : oracle::kContinuous) {
      const SAlgebra alg(kind_of(f));
      const auto dab = d_star(alg, a, b);
      EXPECT_EQ(dab.rational(), oracle::table_distance(f, a.rational(), b.rational()));
      EXPECT_EQ(dab, d_star(alg, b, a));
      EXPECT_LE(dab, alg.star(d_star(alg, a, c), d_star(alg, c, b)));
      EXPECT_LE(dab.rational(), d_star(alg, a, c).rational() + d_star(alg, c, b).rational());
    }
  }
}

TEST(Properties, BallClosedFormOffGrid) {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto a = rng.unit();
    auto r = rng.unit();
    if (r.is_zero()) continue;
    for (NormKind k : kContinuousKinds) {
      const IntervalBall ball(SAlgebra(k), a, r);
      for (int j = 0; j < 20; ++j) {
        const auto b = rng.unit();
        EXPECT_EQ(ball.contains(b), ball.closed_form_contains(b)) << a.str() << " " << r.str() << " " << b.str();
      }
      EXPECT_TRUE(ball.contains(a));
    }
  }
}

TEST(Properties, ParsePrintRoundTripOnRandomFormulas) {
  Rng rng(29);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, 5);
    const std::string text = print_formula(f);
    EXPECT_EQ(parse_formula(text), f) << text;
    EXPECT_EQ(print_formula(desugar(f)), print_formula(parse_formula(print_formula(desugar(f)))));
  }
}

TEST(Properties, DesugaringSoundOnRandomFormulas) {
  Rng rng(31);
  const auto pts = grid(3).points();
  const auto l4 = fixtures::lukasiewicz_chain(4);
  const FiniteView view(l4);
  for (int i = 0; i < 60; ++i) {
    const Formula f = random_formula(rng, 3);
    EXPECT_TRUE(check_desugaring_soundness(f, TAlgebraBackend(NormKind::Product),
                                           std::span<const UnitValue>(pts)).passed())
        << print_formula(f);
    EXPECT_TRUE(check_desugaring_soundness(f, FiniteBackend(l4), view.elements()).passed()) << print_formula(f);
  }
}

TEST(Properties, SmallChainsAreBlAlgebrasWithDiscreteTopologies) {
  for (int n = 2; n <= 9; ++n)
    for (const auto& alg : {fixtures::lukasiewicz_chain(n), fixtures::goedel_chain(n)}) {
      EXPECT_TRUE(all_passed(check_axioms(alg))) << n;
      EXPECT_TRUE(all_passed(check_derived_laws(alg))) << n;
      EXPECT_TRUE(all_passed(check_axioms(dualize_algebra(alg)))) << n;
      EXPECT_TRUE(all_passed(verify_operation_continuity(alg))) << n;
      EXPECT_TRUE(all_passed(check_radius_lemmas(alg))) << n;
    }
}
