#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "staircase/sampler.hpp"
#include "staircase/stats.hpp"

using namespace staircase;

TEST(MoveProbability, MixtureFormEqualsTableForm) {
  const CompletionTable table(30);
  for (int k = 1; k <= 30; ++k) {
    for (int r = 0; r <= 30 - k; ++r) {
      Rational total = move_probability(k, r, Move::up());
      ASSERT_EQ(total, move_probability(table, k, r, Move::up()));
      for (int j = 0; j <= r; ++j) {
        const Rational p = move_probability(k, r, Move::down(j));
        ASSERT_EQ(p, move_probability(table, k, r, Move::down(j))) << k << "," << r << "," << j;
        total += p;
      }
      ASSERT_EQ(total, 1);
    }
  }
  EXPECT_THROW(move_probability(0, 0, Move::up()), std::invalid_argument);
  EXPECT_THROW(move_probability(2, 1, Move::down(2)), std::invalid_argument);
}

TEST(ProbabilityOf, UniformOnSmallSizes) {
  for (int n = 1; n <= 4; ++n) {
    const Rational uniform = make_rational(Integer(1), tableau_count(n));
    Rational total = 0;
    enumerate_all(n, [&](const Tableau& t) {
      const Rational p = probability_of(n, t);
      ASSERT_EQ(p, uniform);
      total += p;
    });
    EXPECT_EQ(total, 1);
  }
}

TEST(DrawBinomial, MatchesTheExactLaw) {
  const int r = 6;
  const long x = 3;
  ExactPMF law{0, {}};
  for (int j = 0; j <= r; ++j)
    law.probs.push_back(make_rational(binomial(r, j) * power(2L, j) * power(x, r - j), power(x + 2, r)));
  for (bool exact_only : {false, true}) {
    Rng rng = make_stream(5, exact_only ? 1 : 0);
    std::uint64_t fallbacks = 0;
    std::vector<long> xs(50'000);
    for (auto& v : xs) v = detail::draw_binomial(rng, r, x, exact_only, fallbacks);
    EXPECT_TRUE(chi_square_test(xs, law, 0.001).pass) << exact_only;
  }
}

TEST(DrawSubset, UniformOverPairs) {
  Rng rng = make_stream(3, 0);
  std::map<std::vector<int>, long> seen;
  std::vector<int> out;
  for (int i = 0; i < 60'000; ++i) {
    detail::draw_subset(rng, 4, 2, out);
    ASSERT_EQ(out.size(), 2u);
    ASSERT_LT(out[0], out[1]);
    ++seen[out];
  }
  ASSERT_EQ(seen.size(), 6u);
  std::vector<long> labels;
  long idx = 0;
  for (const auto& [s, c] : seen) {
    labels.insert(labels.end(), static_cast<std::size_t>(c), idx);
    ++idx;
  }
  ExactPMF uniform{0, std::vector<Rational>(6, make_rational(1L, 6L))};
  EXPECT_TRUE(chi_square_test(labels, uniform, 0.001).pass);
}

TEST(UniformSampler, SizeOneIsFair) {
  std::map<char, int> seen;
  for (std::uint64_t i = 0; i < 4000; ++i) {
    const Tableau t = sample_uniform(1, 11, i);
    seen[symbol_char(*t.at({1, 1}))] += 1;
  }
  EXPECT_EQ(seen.size(), 4u);
  const double filled = (seen['A'] + seen['D']) / 4000.0;
  EXPECT_NEAR(filled, 0.5, 0.03);
}

TEST(UniformSampler, UniformOnSizeTwo) {
  std::map<std::string, long> index;
  enumerate_all(2, [&](const Tableau& t) { index.emplace(to_line(t), static_cast<long>(index.size())); });
  ASSERT_EQ(index.size(), 32u);
  std::vector<long> xs;
  const UniformSampler sampler(2);
  Rng rng = make_stream(17, 0);
  for (int i = 0; i < 64'000; ++i) xs.push_back(index.at(to_line(sampler.sample(rng))));
  ExactPMF uniform{0, std::vector<Rational>(32, make_rational(1L, 32L))};
  EXPECT_TRUE(chi_square_test(xs, uniform, 0.001).pass);
}

TEST(UniformSampler, DeterministicAndValid) {
  for (int n : {1, 3, 9, 40}) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      const Tableau t = sample_uniform(n, 42, i);
      ASSERT_TRUE(validate(t).ok()) << to_line(t);
      ASSERT_EQ(t.size(), n);
      ASSERT_EQ(t, sample_uniform(n, 42, i));
    }
  }
  EXPECT_NE(to_line(sample_uniform(30, 42, 0)), to_line(sample_uniform(30, 43, 0)));
  EXPECT_THROW(UniformSampler(0), std::invalid_argument);
}

TEST(UniformSampler, ExactOnlyGivesIdenticalDraws) {
  for (std::uint64_t i = 0; i < 30; ++i)
    ASSERT_EQ(sample_uniform(25, 8, i), sample_uniform(25, 8, i, SamplerOptions{true}));
}

TEST(UniformSampler, StatisticsMatchTableaux) {
  const auto stats = sample_statistics(12, 40, 77);
  for (std::size_t i = 0; i < stats.size(); ++i) ASSERT_EQ(stats[i], statistics(sample_uniform(12, 77, i)));
  EXPECT_THROW(sample_statistics(3, 0, 1), std::invalid_argument);
}

TEST(UniformSampler, MeanAGRowsAtSizeFifty) {
  const int n = 50;
  const auto stats = sample_statistics(n, 20'000, 5);
  double sum = 0;
  for (const auto& s : stats) sum += s.r;
  const Moments m = moments_r(n);
  const double se = std::sqrt(to_double(m.variance) / static_cast<double>(stats.size()));
  EXPECT_NEAR(sum / static_cast<double>(stats.size()), to_double(m.mean), 4 * se);
}

TEST(UniformSampler, MeanDiagonalAtSizeTwoThousand) {
  const int n = 2000;
  const auto stats = sample_statistics(n, 2000, 6);
  double sum = 0;
  for (const auto& s : stats) sum += s.a_diag;
  const double se = std::sqrt((n + 1) / 12.0 / static_cast<double>(stats.size()));
  EXPECT_NEAR(sum / static_cast<double>(stats.size()), n / 2.0, 5 * se);
}
