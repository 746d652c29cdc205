#include "chev/sampling.hpp"
#include "chev/torsion.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace chev;

TEST(Criterion, Examples) {
  RootSystem a2 = RootSystem::build('A', 2);
  EXPECT_FALSE(criterion(identity_element(a2)));
  EXPECT_FALSE(criterion(element_from_word(a2, {1, 2, 1})));
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 4}, {'B', 3}, {'C', 4}, {'D', 5},
                                                             {'E', 6}, {'F', 4}, {'G', 2}}) {
    EXPECT_TRUE(criterion(coxeter_element(RootSystem::build(type, rank))));
  }
}

TEST(Survey, A2CoxeterHasOrderThree) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 2);
  RepresentativeSurvey s = survey(cb, coxeter_element(cb.roots()), 50, 1);
  EXPECT_EQ(s.m, 3U);
  EXPECT_FALSE(s.eigenvalue_one);
  ASSERT_EQ(s.samples.size(), 50U);
  EXPECT_EQ(s.verdict, SurveyVerdict::AllFiniteUniform);
  ASSERT_TRUE(s.common_order.has_value());
  EXPECT_EQ(*s.common_order, 3);
  EXPECT_TRUE(s.invariants_hold);
  for (const auto& t : s.samples) {
    EXPECT_TRUE(t.order.finite);
    EXPECT_TRUE(t.power_identity);
    EXPECT_TRUE(t.torus_collapse);
  }
}

TEST(Survey, A1ReflectionHasOrderTwo) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 1);
  RepresentativeSurvey s = survey(cb, simple_reflection(cb.roots(), 1), 50, 2);
  ASSERT_TRUE(s.common_order.has_value());
  EXPECT_EQ(*s.common_order, 2);
  EXPECT_TRUE(s.invariants_hold);
}

TEST(Survey, RejectsIdentityAndEmptySample) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 2);
  EXPECT_THROW(survey(cb, identity_element(cb.roots()), 5, 1), std::invalid_argument);
  EXPECT_THROW(survey(cb, coxeter_element(cb.roots()), 0, 1), std::invalid_argument);
}

TEST(Survey, OrdersAgreeWithNaivePowering) {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'B', 2}, {'G', 2}, {'A', 3}}) {
    ChevalleyBasis cb = ChevalleyBasis::build(type, rank);
    RepresentativeSurvey s = survey(cb, coxeter_element(cb.roots()), 8, 3);
    EXPECT_TRUE(s.invariants_hold) << cb.roots().label();
    GroupElement n0 = cb.lift_word(s.word);
    for (const auto& t : s.samples) {
      GroupElement h = cb.identity();
      for (const auto& [b, l] : t.factors) h = h * cb.h(b, l);
      auto naive = oracle::naive_order((n0 * h).matrix(), 2 * s.m);
      ASSERT_TRUE(naive.has_value());
      EXPECT_EQ(t.order.order, *naive);
      EXPECT_EQ((n0 * h).pow(s.m), n0.pow(s.m));
    }
  }
}

TEST(Survey, ReplayIsDeterministic) {
  ChevalleyBasis cb = ChevalleyBasis::build('B', 2);
  auto a = survey(cb, coxeter_element(cb.roots()), 10, 42);
  auto b = survey(cb, coxeter_element(cb.roots()), 10, 42);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].factors, b.samples[i].factors);
}

TEST(InfiniteWitness, A2ReflectionUsesAlpha2) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 2);
  const RootSystem& R = cb.roots();
  WeylElement s1 = simple_reflection(R, 1);
  EXPECT_TRUE(is_zero(orbit_sum(s1, R.vector(R.simple(1)))));
  InfiniteWitness w = infinite_witness(cb, s1);
  ASSERT_TRUE(w.success);
  EXPECT_FALSE(is_zero(w.orbit_sum));
  EXPECT_EQ(w.orbit_sum, orbit_sum(s1, R.vector(w.beta)));
  EXPECT_EQ(w.g, cb.lift_word({1}) * cb.h(w.beta, Rational(2)));
  EXPECT_FALSE(w.order.finite);
  // d = 8 and L(8) = 5040.
  EXPECT_EQ(cb.dim(), 8U);
  EXPECT_EQ(w.order.bound, oracle::exponent_bound(8));
  EXPECT_FALSE(w.g.pow(5040).is_identity());
}

TEST(InfiniteWitness, IdentityAndRejection) {
  ChevalleyBasis cb = ChevalleyBasis::build('B', 2);
  InfiniteWitness w = infinite_witness(cb, identity_element(cb.roots()));
  EXPECT_TRUE(w.success);
  EXPECT_EQ(w.orbit_sum, cb.roots().vector(w.beta));
  EXPECT_THROW(infinite_witness(cb, coxeter_element(cb.roots())), std::invalid_argument);
}

TEST(FullScan, RowCounts) {
  struct Case {
    char type;
    int rank;
    std::size_t rows;
    std::size_t criterion_true;
  };
  // Elements without eigenvalue 1 counted by brute force over the Weyl group.
  for (auto c : std::vector<Case>{{'A', 1, 2, 1}, {'A', 2, 6, 2}, {'B', 2, 8, 3}, {'A', 3, 24, 6}}) {
    ChevalleyBasis cb = ChevalleyBasis::build(c.type, c.rank);
    auto rows = full_scan(cb, 100, 3, 5);
    EXPECT_EQ(rows.size(), c.rows);
    std::size_t count = 0;
    std::size_t oracle_count = 0;
    for (const auto& w : enumerate(cb.roots(), 100)) {
      oracle_count += oracle::rank(w.matrix() - QMatrix::identity(w.rank())) == w.rank() ? 1 : 0;
    }
    for (const auto& r : rows) {
      if (r.criterion) {
        ++count;
        ASSERT_TRUE(r.survey.has_value());
        EXPECT_TRUE(r.survey->invariants_hold);
        EXPECT_TRUE(r.orbit_sum_zero);
      } else if (!r.word.empty()) {
        ASSERT_TRUE(r.witness_ok.has_value());
        EXPECT_TRUE(*r.witness_ok);
        EXPECT_FALSE(r.orbit_sum_zero);
      }
    }
    EXPECT_EQ(count, c.criterion_true);
    EXPECT_EQ(count, oracle_count);
  }
}

TEST(FullScan, B2CriterionElementsAreRotations) {
  ChevalleyBasis cb = ChevalleyBasis::build('B', 2);
  for (const auto& r : full_scan(cb, 100, 2, 1)) {
    if (r.criterion) {
      EXPECT_TRUE(r.m == 4 || r.m == 2);
      EXPECT_EQ(r.word.size() % 2, 0U);
    }
  }
  EXPECT_THROW(full_scan(ChevalleyBasis::build('D', 4), 100, 1, 1), std::length_error);
}

TEST(TorsionOrder, Examples) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 2);
  TorsionOrder id = torsion_order(cb.identity().matrix());
  EXPECT_TRUE(id.finite);
  EXPECT_EQ(id.order, 1);
  EXPECT_FALSE(torsion_order(cb.x(0, Rational(1)).matrix()).finite);
  EXPECT_THROW(torsion_order(QMatrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(torsion_order(QMatrix(2, 2)), std::invalid_argument);
}

TEST(TorsionOrder, ExponentBoundMatchesOracle) {
  EXPECT_EQ(torsion_exponent_bound(3), 12);
  EXPECT_EQ(torsion_exponent_bound(8), 5040);
  for (std::size_t d = 1; d <= 14; ++d) EXPECT_EQ(torsion_exponent_bound(d), oracle::exponent_bound(d)) << d;
}

TEST(TorsionOrder, AgreesWithNaiveOrderOnMProducts) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 2);
  SampleRng rng(31);
  std::size_t finite = 0;
  for (int i = 0; i < 40; ++i) {
    GroupElement g = cb.identity();
    std::size_t len = 1 + rng.below(4);
    for (std::size_t k = 0; k < len; ++k) {
      g = g * cb.m(rng.below(cb.roots().size()), rng.coin() ? Rational(1) : Rational(-1));
    }
    TorsionOrder t = torsion_order(g.matrix());
    auto naive = oracle::naive_order(g.matrix(), 5040);
    ASSERT_EQ(t.finite, naive.has_value());
    if (naive) {
      ++finite;
      EXPECT_EQ(t.order, *naive);
    }
  }
  EXPECT_GT(finite, 0U);
}
