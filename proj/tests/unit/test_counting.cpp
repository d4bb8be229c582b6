#include <gtest/gtest.h>

#include "staircase/counting.hpp"
#include "staircase/enumerator.hpp"
#include "staircase/sampler.hpp"

using namespace staircase;

TEST(Multiplicity, SmallCases) {
  EXPECT_EQ(multiplicity(1, Move::up()), 2);
  EXPECT_EQ(multiplicity(1, Move::down(0)), 6);
  EXPECT_EQ(multiplicity(1, Move::down(1)), 4);
  EXPECT_EQ(multiplicity(0, Move::up()), 2);
  EXPECT_EQ(multiplicity(0, Move::down(0)), 2);
  EXPECT_THROW(multiplicity(1, Move::down(2)), std::invalid_argument);
  EXPECT_THROW(multiplicity(-1, Move::up()), std::invalid_argument);
}

TEST(Multiplicity, SumsToFourTimesThreeToTheR) {
  for (int r = 0; r <= 20; ++r) {
    Integer total = multiplicity(r, Move::up());
    for (int k = 0; k <= r; ++k) total += multiplicity(r, Move::down(k));
    EXPECT_EQ(total, 4 * power(3L, r)) << "r=" << r;
  }
  Integer r3 = multiplicity(3, Move::up());
  for (int k = 0; k <= 3; ++k) r3 += multiplicity(3, Move::down(k));
  EXPECT_EQ(r3, 108);
}

TEST(Completions, Examples) {
  const CompletionTable t6(6);
  EXPECT_EQ(t6.at(1, 2), 36);
  EXPECT_EQ(t6.at(2, 0), 32);
  EXPECT_EQ(t6.at(6, 0), 2949120);
  for (int r = 0; r <= 5; ++r) EXPECT_EQ(t6.at(1, r), 4 * power(3L, r));
  for (int r = 0; r <= 6; ++r) EXPECT_EQ(t6.at(0, r), 1);
  EXPECT_THROW(t6.at(6, 1), std::out_of_range);
  EXPECT_FALSE(t6.contains(3, 4));
  EXPECT_THROW(CompletionTable(0), std::invalid_argument);
}

TEST(Completions, TopEntryIsTheTotalCount) {
  for (int n = 1; n <= 50; ++n) EXPECT_EQ(completions(n).at(n, 0), total_count(n)) << "n=" << n;
}

TEST(Completions, ClosedFormAgreesWithTheTable) {
  const CompletionTable t(40);
  for (int k = 0; k <= 40; ++k)
    for (int r = 0; r <= 40 - k; ++r) ASSERT_EQ(t.at(k, r), completion_closed_form(k, r)) << k << "," << r;
}

TEST(TotalCount, Examples) {
  EXPECT_EQ(total_count(0), 1);
  EXPECT_EQ(total_count(1), 4);
  EXPECT_EQ(total_count(5), 122880);
  EXPECT_EQ(total_count(7), 82575360);
  EXPECT_THROW(total_count(-1), std::invalid_argument);
}

// Removing the first column maps the uniform law on size n to the law on
// size n-1 with density 3^r / n relative to uniform.
TEST(ChangeOfMeasure, ParentExpectationIsReweighted) {
  for (int n = 2; n <= 5; ++n) {
    Rational lhs = 0;
    enumerate_all(n, [&](const Tableau& t) {
      const StatVector s = statistics(split_first_column(t).first);
      lhs += s.a_diag + 2 * s.gamma + 1;
    });
    lhs /= Rational(total_count(n));
    Rational rhs = 0;
    enumerate_all(n - 1, [&](const Tableau& t) {
      const StatVector s = statistics(t);
      rhs += Rational(power(3L, s.r)) * (s.a_diag + 2 * s.gamma + 1);
    });
    rhs /= Rational(total_count(n - 1)) * n;
    EXPECT_EQ(lhs, rhs) << "n=" << n;
  }
}
