#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "staircase/core.hpp"
#include "staircase/enumerator.hpp"

using namespace staircase;
using GS = GreekSymbol;

namespace {

Tableau size7_example() {
  std::ifstream in(std::string(STAIRCASE_TEST_DATA) + "/size7_example.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

}  // namespace

TEST(Symbols, ClassesAndCharacters) {
  EXPECT_TRUE(is_ag(GS::Alpha));
  EXPECT_TRUE(is_ag(GS::Gamma));
  EXPECT_TRUE(is_bd(GS::Beta));
  EXPECT_TRUE(is_bd(GS::Delta));
  for (GS s : kAllSymbols) {
    EXPECT_NE(is_ag(s), is_bd(s));
    EXPECT_EQ(parse_symbol(symbol_char(s)), s);
  }
  EXPECT_THROW(parse_symbol('X'), std::invalid_argument);
}

TEST(Tableau, RejectsDuplicateCells) {
  EXPECT_THROW(Tableau(1, {{{1, 1}, GS::Alpha}, {{1, 1}, GS::Beta}}), std::invalid_argument);
  EXPECT_THROW(Tableau(-1, {}), std::invalid_argument);
}

TEST(Validate, SingleCell) {
  EXPECT_TRUE(validate(Tableau(1, {{{1, 1}, GS::Alpha}})).ok());
  EXPECT_TRUE(validate(Tableau(1, {})).has(Rule::EmptyDiagonal));
}

TEST(Validate, EntryLeftOfBD) {
  const Tableau t(2, {{{1, 1}, GS::Beta}, {{1, 2}, GS::Beta}, {{2, 1}, GS::Alpha}});
  const auto v = validate(t);
  ASSERT_FALSE(v.ok());
  EXPECT_TRUE(v.has(Rule::EntryLeftOfBD));
  bool found = false;
  for (const auto& x : v.violations) found = found || x.message().find("entry left of BD-class") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(Validate, EntryAboveAGAndOutOfShape) {
  EXPECT_TRUE(validate(Tableau(2, {{{1, 1}, GS::Beta}, {{2, 1}, GS::Gamma}, {{1, 2}, GS::Beta}})).has(Rule::EntryAboveAG));
  EXPECT_TRUE(validate(Tableau(2, {{{2, 2}, GS::Beta}, {{2, 1}, GS::Beta}, {{1, 2}, GS::Beta}})).has(Rule::OutOfShape));
  EXPECT_THROW(require_valid(Tableau(2, {{{1, 2}, GS::Beta}})), std::invalid_argument);
}

TEST(Validate, AcceptsExactlyTheBruteForceSetForSmallSizes) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> brute;
    oracle::for_each_filling(n, [&](const Tableau& t) {
      if (validate(t).ok()) brute.insert(to_line(t));
      EXPECT_EQ(validate(t).ok(), oracle::is_staircase_tableau(t));
    });
    EXPECT_EQ(Integer(static_cast<unsigned long>(brute.size())), tableau_count(n));
  }
}

TEST(TypeWord, SingleCells) {
  EXPECT_EQ(type_word(Tableau(1, {{{1, 1}, GS::Alpha}})).str(), "•");
  EXPECT_EQ(type_word(Tableau(1, {{{1, 1}, GS::Gamma}})).str(), "◦");
  EXPECT_EQ(type_word(Tableau(1, {{{1, 1}, GS::Delta}})).ascii(), "1");
  EXPECT_EQ(type_word(Tableau(1, {{{1, 1}, GS::Beta}})).ascii(), "0");
}

TEST(TypeWord, BitsRoundTrip) {
  const TypeWord w = TypeWord::from_bits(0b1100101, 7);
  EXPECT_EQ(w.ascii(), "1010011");
  EXPECT_EQ(w.bits(), 0b1100101u);
  EXPECT_EQ(w.filled(), 4u);
}

TEST(TypeWord, LengthAndFilledCountOverAllSize3) {
  enumerate_all(3, [](const Tableau& t) {
    const TypeWord w = type_word(t);
    ASSERT_EQ(w.size(), 3u);
    std::size_t filled = 0;
    for (int k = 1; k <= 3; ++k) {
      const GS s = *t.at({k, 4 - k});
      filled += (s == GS::Alpha || s == GS::Delta) ? 1 : 0;
    }
    EXPECT_EQ(w.filled(), filled);
  });
}

TEST(Labeling, NoEmptyCells) {
  EXPECT_TRUE(label_uq(Tableau(1, {{{1, 1}, GS::Alpha}})).labels.empty());
}

TEST(Labeling, CellAboveBetaGetsQ) {
  const LabeledTableau lt = label_uq(Tableau(2, {{{1, 2}, GS::Alpha}, {{2, 1}, GS::Beta}}));
  ASSERT_EQ(lt.labels.size(), 1u);
  EXPECT_EQ(lt.label_at({1, 1}), Label::Q);
}

TEST(Labeling, RowPassTakesPrecedence) {
  // (1,1) is left of the Beta at (1,2) and above the Gamma at (2,1).
  const LabeledTableau lt = label_uq(Tableau(2, {{{1, 2}, GS::Beta}, {{2, 1}, GS::Gamma}}));
  EXPECT_EQ(lt.label_at({1, 1}), Label::U);
  const LabeledTableau lt2 = label_uq(Tableau(2, {{{1, 2}, GS::Delta}, {{2, 1}, GS::Alpha}}));
  EXPECT_EQ(lt2.label_at({1, 1}), Label::Q);
}

TEST(Labeling, NearestEntryBelowDecides) {
  // Column 1 of size 3: (1,1) empty, (2,1) Gamma, (3,1) Delta.
  const Tableau t(3, {{{1, 3}, GS::Alpha}, {{2, 1}, GS::Gamma}, {{2, 2}, GS::Alpha}, {{3, 1}, GS::Delta}});
  ASSERT_TRUE(validate(t).ok());
  const LabeledTableau lt = label_uq(t);
  EXPECT_EQ(lt.label_at({1, 1}), Label::Q);
  EXPECT_EQ(lt.label_at({1, 2}), Label::U);
}

TEST(Weight, SingleBeta) {
  const WeightMonomial w = weight(Tableau(1, {{{1, 1}, GS::Beta}}));
  EXPECT_EQ(w.exponents, (std::array<int, 6>{0, 1, 0, 0, 0, 0}));
}

TEST(Weight, DegreeAndCoverageOverAllSmallTableaux) {
  for (int n = 1; n <= 4; ++n) {
    enumerate_all(n, [n](const Tableau& t) {
      EXPECT_EQ(weight(t).degree(), n * (n + 1) / 2);
      const LabeledTableau lt = label_uq(t);
      EXPECT_EQ(static_cast<long>(lt.labels.size() + t.entries().size()), Tableau::cell_count(n));
    });
  }
}

TEST(Statistics, SingleGamma) {
  const StatVector s = statistics(Tableau(1, {{{1, 1}, GS::Gamma}}));
  EXPECT_EQ(s, (StatVector{1, 0, 1, 1, 0}));
}

TEST(Statistics, InvariantsOverAllSize2AndSize4) {
  for (int n : {2, 4}) {
    enumerate_all(n, [n](const Tableau& t) {
      const StatVector s = statistics(t);
      EXPECT_EQ(s.r + s.delta, n);
      EXPECT_EQ(s.a_diag + s.b_diag, n);
      EXPECT_GE(s.gamma, s.a_diag);
      EXPECT_GE(s.delta, s.b_diag);
    });
  }
}

TEST(Size7Example, KnownTypeWeightAndStatistics) {
  const Tableau t = size7_example();
  ASSERT_EQ(t.size(), 7);
  EXPECT_TRUE(validate(t).ok());
  EXPECT_EQ(type_word(t).str(), "◦◦•••◦◦");
  EXPECT_EQ(weight(t).exponents, (std::array<int, 6>{3, 2, 3, 3, 8, 9}));
  const LabeledTableau lt = label_uq(t);
  EXPECT_EQ(lt.count(Label::U), 8u);
  EXPECT_EQ(lt.count(Label::Q), 9u);
  EXPECT_EQ(statistics(t), (StatVector{2, 5, 6, 4, 3}));
  EXPECT_EQ(*t.at({2, 3}), GS::Alpha);
  EXPECT_EQ(*t.at({7, 1}), GS::Gamma);
}

TEST(TextForms, RoundTrip) {
  const Tableau t = size7_example();
  EXPECT_EQ(from_text(to_text(t)), t);
  EXPECT_EQ(from_line(to_line(t)), t);
  EXPECT_EQ(to_line(Tableau(1, {{{1, 1}, GS::Delta}})), "1;1 1 D");
  EXPECT_THROW(from_text("1 1 A\n"), std::invalid_argument);
  EXPECT_THROW(from_line("2;1 1"), std::invalid_argument);
}
