#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "oracle.hpp"
#include "staircase/counting.hpp"
#include "staircase/enumerator.hpp"

using namespace staircase;
using GS = GreekSymbol;

namespace {

std::string fill_key(const ColumnFill& f) {
  std::string s(1, symbol_char(f.bottom));
  for (const auto& [rank, sym] : f.upper) s += ";" + std::to_string(rank) + symbol_char(sym);
  return s;
}

std::vector<Tableau> all_of_size(int n) {
  std::vector<Tableau> out;
  enumerate_all(n, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

}  // namespace

TEST(LegalFills, CountIsFourTimesThreeToTheR) {
  for (int r = 0; r <= 12; ++r) {
    std::uint64_t count = 0;
    for_each_legal_fill(r, [&](const ColumnFill& f) {
      ++count;
      EXPECT_TRUE(is_legal_fill(f, r));
    });
    EXPECT_EQ(Integer(static_cast<unsigned long>(count)), 4 * power(3L, r)) << "r=" << r;
  }
}

TEST(LegalFills, SmallCasesAreDistinct) {
  const auto f0 = legal_fills(0);
  ASSERT_EQ(f0.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(f0[i].bottom, kAllSymbols[i]);
    EXPECT_TRUE(f0[i].upper.empty());
  }
  EXPECT_EQ(legal_fills(1).size(), 12u);
  std::set<std::string> keys;
  for (const auto& f : legal_fills(2)) keys.insert(fill_key(f));
  EXPECT_EQ(keys.size(), 36u);
}

TEST(LegalFills, MoveClassesMatchMultiplicities) {
  for (int r = 0; r <= 8; ++r) {
    std::map<int, std::uint64_t> by_next;
    for_each_legal_fill(r, [&](const ColumnFill& f) { ++by_next[f.next_r(r)]; });
    EXPECT_EQ(Integer(static_cast<unsigned long>(by_next[r + 1])), multiplicity(r, Move::up()));
    for (int k = 0; k <= r; ++k)
      EXPECT_EQ(Integer(static_cast<unsigned long>(by_next[r - k])), multiplicity(r, Move::down(k)))
          << "r=" << r << " k=" << k;
  }
}

TEST(LegalFills, RejectsBrokenInvariants) {
  EXPECT_FALSE(is_legal_fill({GS::Alpha, {{1, GS::Beta}}}, 1));
  EXPECT_FALSE(is_legal_fill({GS::Beta, {{1, GS::Alpha}, {2, GS::Beta}}}, 2));
  EXPECT_FALSE(is_legal_fill({GS::Beta, {{2, GS::Beta}}}, 1));
  EXPECT_TRUE(is_legal_fill({GS::Beta, {{1, GS::Delta}, {2, GS::Gamma}}}, 2));
}

TEST(Extend, FromTheEmptyTableau) {
  const Tableau t = extend(Tableau(0, {}), {GS::Alpha, {}});
  EXPECT_EQ(t, Tableau(1, {{{1, 1}, GS::Alpha}}));
}

TEST(Extend, AddsUpperEntriesInAGRows) {
  const Tableau t = extend(Tableau(1, {{{1, 1}, GS::Alpha}}), {GS::Beta, {{1, GS::Gamma}}});
  EXPECT_EQ(t, Tableau(2, {{{1, 1}, GS::Gamma}, {{1, 2}, GS::Alpha}, {{2, 1}, GS::Beta}}));
  EXPECT_TRUE(validate(t).ok());
}

TEST(Extend, RejectsIncompatibleFill) {
  EXPECT_THROW(extend(Tableau(1, {{{1, 1}, GS::Beta}}), {GS::Beta, {{1, GS::Beta}}}), std::invalid_argument);
}

TEST(Extend, PredictsTheNewAGRowCount) {
  for (const Tableau& t : all_of_size(2)) {
    const int r = statistics(t).r;
    for (const auto& f : legal_fills(r)) {
      const Tableau e = extend(t, f);
      EXPECT_TRUE(validate(e).ok());
      EXPECT_EQ(statistics(e).r, f.next_r(r));
    }
  }
}

TEST(SplitFirstColumn, InvertsExtend) {
  for (const Tableau& t : all_of_size(3)) {
    const auto [parent, fill] = split_first_column(t);
    EXPECT_EQ(parent.size(), 2);
    EXPECT_EQ(extend(parent, fill), t);
  }
}

TEST(EnumerateAll, CountsAndValidity) {
  EXPECT_EQ(enumerate_all(0, [](const Tableau&) {}), 1);
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    std::uint64_t invalid = 0;
    const Integer count = enumerate_all(n, [&](const Tableau& t) {
      if (!validate(t).ok()) ++invalid;
      seen.insert(to_line(t));
    });
    EXPECT_EQ(count, tableau_count(n));
    EXPECT_EQ(Integer(static_cast<unsigned long>(seen.size())), count) << "duplicates at n=" << n;
    EXPECT_EQ(invalid, 0u);
  }
}

TEST(EnumerateAll, SizeSix) { EXPECT_EQ(enumerate_all(6, [](const Tableau&) {}), 2949120); }

TEST(EnumerateAll, SameSetAsBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> brute, grown;
    oracle::for_each_filling(n, [&](const Tableau& t) {
      if (oracle::is_staircase_tableau(t)) brute.insert(to_line(t));
    });
    enumerate_all(n, [&](const Tableau& t) { grown.insert(to_line(t)); });
    EXPECT_EQ(brute, grown);
  }
}

TEST(EnumerateAll, OrderIsDeterministic) {
  std::vector<std::string> a, b;
  enumerate_all(3, [&](const Tableau& t) { a.push_back(to_line(t)); });
  enumerate_all(3, [&](const Tableau& t) { b.push_back(to_line(t)); });
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.front(), "3;1 3 A;2 2 A;3 1 A");
}

TEST(EnumerateParallel, SameMultisetAsSerial) {
  std::vector<std::string> serial;
  enumerate_all(4, [&](const Tableau& t) { serial.push_back(to_line(t)); });
  std::vector<std::vector<std::string>> per_worker(3);
  const Integer count =
      enumerate_parallel(4, 3, [&](const Tableau& t, std::size_t w) { per_worker[w].push_back(to_line(t)); });
  std::vector<std::string> merged;
  for (auto& v : per_worker) merged.insert(merged.end(), v.begin(), v.end());
  std::sort(serial.begin(), serial.end());
  std::sort(merged.begin(), merged.end());
  EXPECT_EQ(count, 6144);
  EXPECT_EQ(merged, serial);
}
