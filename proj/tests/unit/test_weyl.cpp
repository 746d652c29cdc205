#include "chev/weyl.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace chev;

namespace {

QMatrix minus_identity(const QMatrix& m) {
  QMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= 1;
  return out;
}

}  // namespace

TEST(Weyl, WordParsing) {
  EXPECT_EQ(parse_word("1,2,1"), (WeylWord{1, 2, 1}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_EQ(to_string(WeylWord{3, 1}), "3,1");
  EXPECT_THROW(parse_word("1,x"), std::invalid_argument);
}

TEST(Weyl, SimpleReflectionExamples) {
  RootSystem a1 = RootSystem::build('A', 1);
  WeylElement s = simple_reflection(a1, 1);
  EXPECT_EQ(s.matrix()(0, 0), -1);
  EXPECT_EQ(order(s), 2U);
  RootSystem a2 = RootSystem::build('A', 2);
  WeylElement s1 = simple_reflection(a2, 1);
  EXPECT_EQ(order(s1), 2U);
  EXPECT_EQ(s1.matrix().determinant(), -1);
  EXPECT_EQ(a2.coords(apply(a2, s1, a2.simple(2))), (RootCoords{1, 1}));
  EXPECT_EQ(apply(a2, s1, a2.simple(2)), a2.reflect(a2.simple(1), a2.simple(2)));
  EXPECT_THROW(simple_reflection(a2, 0), std::out_of_range);
  EXPECT_THROW(simple_reflection(a2, 3), std::out_of_range);
  EXPECT_EQ(s1.word(), (WeylWord{1}));
}

TEST(Weyl, OrderExamples) {
  RootSystem a2 = RootSystem::build('A', 2);
  EXPECT_EQ(order(identity_element(a2)), 1U);
  WeylElement c = coxeter_element(a2);
  EXPECT_EQ(order(c), 3U);
  EXPECT_TRUE(power(c, 3).matrix().is_identity());
  EXPECT_EQ(order(coxeter_element(RootSystem::build('G', 2))), 6U);
}

TEST(Weyl, EigenvalueExamples) {
  RootSystem a2 = RootSystem::build('A', 2);
  EXPECT_TRUE(has_eigenvalue_one(identity_element(a2)));
  WeylElement c = coxeter_element(a2);
  EXPECT_FALSE(has_eigenvalue_one(c));
  EXPECT_EQ(det_minus_identity(c), 3);
  EXPECT_TRUE(has_eigenvalue_one(simple_reflection(a2, 1)));
  // Longest element of A_2 is a reflection of E.
  EXPECT_TRUE(has_eigenvalue_one(element_from_word(a2, {1, 2, 1})));
}

TEST(Weyl, OrbitSumExamples) {
  RootSystem a2 = RootSystem::build('A', 2);
  QVector v = a2.vector(a2.simple(1));
  EXPECT_EQ(orbit_sum(identity_element(a2), v), v);
  WeylElement c = coxeter_element(a2);
  for (RootId r = 0; r < a2.size(); ++r) EXPECT_TRUE(is_zero(orbit_sum(c, a2.vector(r))));
  // α_1 + 2α_2 lies on the hyperplane fixed by s_1 in B_2.
  RootSystem b2 = RootSystem::build('B', 2);
  QVector fixed = b2.vector(*b2.find({1, 2}));
  QVector twice = fixed;
  for (auto& x : twice) x *= 2;
  EXPECT_EQ(orbit_sum(simple_reflection(b2, 1), fixed), twice);
}

TEST(Weyl, CoxeterElements) {
  const std::pair<char, int> types[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3},
                                        {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};
  // Coxeter numbers from the classification tables.
  const int h[] = {2, 3, 4, 4, 6, 6, 6, 8, 6, 12, 12, 18, 30};
  for (std::size_t k = 0; k < std::size(types); ++k) {
    RootSystem R = RootSystem::build(types[k].first, types[k].second);
    WeylElement c = coxeter_element(R);
    EXPECT_EQ(order(c), static_cast<unsigned long>(h[k])) << R.label();
    EXPECT_NE(det_minus_identity(c), 0) << R.label();
    EXPECT_EQ(R.coxeter_number(), h[k]);
  }
}

TEST(Weyl, EnumerateSizes) {
  EXPECT_EQ(enumerate(RootSystem::build('A', 2), 100).size(), 6U);
  EXPECT_EQ(enumerate(RootSystem::build('B', 2), 100).size(), 8U);
  EXPECT_EQ(enumerate(RootSystem::build('A', 3), 100).size(), 24U);
  EXPECT_EQ(enumerate(RootSystem::build('G', 2), 100).size(), 12U);
  EXPECT_EQ(enumerate(RootSystem::build('D', 4), 1000).size(), 192U);
  EXPECT_THROW(enumerate(RootSystem::build('A', 3), 23), std::length_error);
}

TEST(Weyl, ElementInvariants) {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    RootSystem R = RootSystem::build(type, rank);
    auto all = enumerate(R, 100);
    EXPECT_EQ(all.size(), R.weyl_order());
    for (const auto& w : all) {
      EXPECT_TRUE(preserves_form(R, w));
      EXPECT_EQ(element_from_word(R, w.word()).matrix(), w.matrix());
      // Permutes Φ.
      std::set<RootId> image;
      for (RootId r = 0; r < R.size(); ++r) image.insert(apply(R, w, r));
      EXPECT_EQ(image.size(), R.size());
    }
  }
}

TEST(Weyl, CoxeterMatrixRelations) {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}, {'D', 4}, {'F', 4}}) {
    RootSystem R = RootSystem::build(type, rank);
    for (int i = 1; i <= rank; ++i) {
      for (int j = 1; j <= rank; ++j) {
        int m = coxeter_matrix_entry(R, i, j);
        // m_ij from the Cartan product a_ij a_ji: 0,1,2,3 give 2,3,4,6.
        int prod = R.cartan()[i - 1][j - 1] * R.cartan()[j - 1][i - 1];
        int expected = i == j ? 1 : (prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6);
        EXPECT_EQ(m, expected);
        WeylElement sij = compose(simple_reflection(R, i), simple_reflection(R, j));
        EXPECT_TRUE(power(sij, static_cast<unsigned long>(m)).matrix().is_identity());
      }
    }
  }
}

// Brute-force equivalence: no eigenvalue 1 exactly when Σ w^i kills every basis vector.
TEST(Weyl, EigenvalueMatchesOrbitSumAndRank) {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3},
                                                             {'B', 3}, {'C', 3}}) {
    RootSystem R = RootSystem::build(type, rank);
    for (const auto& w : enumerate(R, 100)) {
      bool all_zero = true;
      for (int i = 0; i < rank; ++i) {
        QVector e(static_cast<std::size_t>(rank), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        all_zero = all_zero && is_zero(orbit_sum(w, e));
      }
      bool singular = oracle::rank(minus_identity(w.matrix())) < static_cast<std::size_t>(rank);
      EXPECT_EQ(has_eigenvalue_one(w), !all_zero) << R.label() << " " << to_string(w.word());
      EXPECT_EQ(has_eigenvalue_one(w), singular);
    }
  }
}
