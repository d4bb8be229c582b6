#pragma once

// Growth of staircase tableaux by adding a new leftmost column, and
// exhaustive enumeration of all tableaux of a given size through it.
//
// When a size-(n-1) tableau with r AG-indexed rows grows to size n, the new
// column 1 has its bottom cell at row n (a diagonal cell) and may only hold
// entries in the r AG-indexed rows above; every other cell must stay empty.
// Those r rows are addressed by their rank counted bottom-up (1 = lowest).

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "core.hpp"
#include "exact.hpp"

namespace staircase {

struct ColumnFill {
  GreekSymbol bottom = GreekSymbol::Alpha;
  /// (AG-row rank, symbol), sorted by rank ascending.
  std::vector<std::pair<int, GreekSymbol>> upper;

  /// Number of BD-class upper entries; each turns an AG row into a BD row.
  int bd_upper() const {
    int k = 0;
    for (const auto& [rank, s] : upper) k += is_bd(s) ? 1 : 0;
    return k;
  }
  bool has_ag_upper() const {
    for (const auto& [rank, s] : upper)
      if (is_ag(s)) return true;
    return false;
  }
  /// AG-row count after applying this fill to a tableau with r AG rows.
  int next_r(int r) const { return is_ag(bottom) ? r + 1 : r - bd_upper(); }

  friend bool operator==(const ColumnFill&, const ColumnFill&) = default;
};

/// Checks the structural invariants of a fill against an AG-row count r.
inline bool is_legal_fill(const ColumnFill& f, int r) {
  if (is_ag(f.bottom)) return f.upper.empty();
  int prev = 0;
  for (std::size_t i = 0; i < f.upper.size(); ++i) {
    const auto& [rank, s] = f.upper[i];
    if (rank <= prev || rank > r) return false;
    prev = rank;
    if (is_ag(s) && i + 1 != f.upper.size()) return false;  // AG must be topmost
  }
  return true;
}

/// Streams every legal fill for r AG rows in the fixed order: bottom symbol
/// (A, B, G, D), then subset of ranks as an increasing bitmask, then symbol
/// choices (topmost entry over A, B, G, D; the others over B, D).
template <typename Fn>
void for_each_legal_fill(int r, Fn&& fn) {
  if (r < 0) throw std::invalid_argument("negative AG-row count");
  if (r > 62) throw std::invalid_argument("AG-row count too large to enumerate fills");
  ColumnFill f;
  for (GreekSymbol bottom : kAllSymbols) {
    f.bottom = bottom;
    f.upper.clear();
    if (is_ag(bottom)) {
      fn(static_cast<const ColumnFill&>(f));
      continue;
    }
    const std::uint64_t subsets = std::uint64_t{1} << r;
    std::vector<int> ranks;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      ranks.clear();
      for (int b = 0; b < r; ++b)
        if ((mask >> b) & 1U) ranks.push_back(b + 1);
      if (ranks.empty()) {
        f.upper.clear();
        fn(static_cast<const ColumnFill&>(f));
        continue;
      }
      const std::size_t lower = ranks.size() - 1;
      for (GreekSymbol top : kAllSymbols) {
        const std::uint64_t variants = std::uint64_t{1} << lower;
        for (std::uint64_t choice = 0; choice < variants; ++choice) {
          f.upper.clear();
          for (std::size_t i = 0; i < lower; ++i)
            f.upper.emplace_back(ranks[i], ((choice >> i) & 1U) ? GreekSymbol::Delta
                                                                : GreekSymbol::Beta);
          f.upper.emplace_back(ranks.back(), top);
          fn(static_cast<const ColumnFill&>(f));
        }
      }
    }
  }
}

inline std::vector<ColumnFill> legal_fills(int r) {
  std::vector<ColumnFill> out;
  for_each_legal_fill(r, [&](const ColumnFill& f) { out.push_back(f); });
  return out;
}

/// Rows indexed by an AG-class symbol, lowest row first.
inline std::vector<int> ag_rows_bottom_up(const Tableau& t) {
  std::vector<int> rows;
  int current = 0;
  for (const auto& e : t.entries()) {
    if (e.cell.row == current) continue;
    current = e.cell.row;
    if (is_ag(e.symbol)) rows.push_back(current);
  }
  return {rows.rbegin(), rows.rend()};
}

inline Tableau extend(const Tableau& t, const ColumnFill& f) {
  require_valid(t);
  const std::vector<int> ag_rows = ag_rows_bottom_up(t);
  const int r = static_cast<int>(ag_rows.size());
  if (!is_legal_fill(f, r))
    throw std::invalid_argument("column fill is incompatible with the tableau's AG rows");
  const int n = t.size() + 1;
  std::vector<Entry> entries;
  entries.reserve(t.entries().size() + f.upper.size() + 1);
  for (const auto& e : t.entries()) entries.push_back({{e.cell.row, e.cell.col + 1}, e.symbol});
  entries.push_back({{n, 1}, f.bottom});
  for (const auto& [rank, s] : f.upper) entries.push_back({{ag_rows[rank - 1], 1}, s});
  return Tableau(n, std::move(entries));
}

/// Inverse of extend: the unique parent and the fill of the first column.
inline std::pair<Tableau, ColumnFill> split_first_column(const Tableau& t) {
  require_valid(t);
  const int n = t.size();
  if (n < 1) throw std::invalid_argument("the empty tableau has no first column");
  std::vector<Entry> parent_entries;
  std::vector<Entry> first_column;
  for (const auto& e : t.entries()) {
    if (e.cell.col == 1)
      first_column.push_back(e);
    else
      parent_entries.push_back({{e.cell.row, e.cell.col - 1}, e.symbol});
  }
  Tableau parent(n - 1, std::move(parent_entries));
  const std::vector<int> ag_rows = ag_rows_bottom_up(parent);
  ColumnFill f;
  for (const auto& e : first_column) {
    if (e.cell.row == n) {
      f.bottom = e.symbol;
      continue;
    }
    int rank = 0;
    for (std::size_t i = 0; i < ag_rows.size(); ++i)
      if (ag_rows[i] == e.cell.row) rank = static_cast<int>(i) + 1;
    if (rank == 0) throw std::logic_error("first-column entry outside an AG row");
    f.upper.emplace_back(rank, e.symbol);
  }
  std::sort(f.upper.begin(), f.upper.end());
  return {std::move(parent), std::move(f)};
}

namespace detail {

// Mutable growth path used by the enumerator; columns[m-1] is the column
// added at step m, which ends up as column n+1-m of the size-n tableau.
struct GrowthPath {
  int size = 0;
  std::vector<int> ag_rows;  // bottom-up
  std::vector<std::vector<std::pair<int, GreekSymbol>>> columns;

  void push(const ColumnFill& f) {
    const int m = size + 1;
    std::vector<std::pair<int, GreekSymbol>> column;
    column.reserve(f.upper.size() + 1);
    column.emplace_back(m, f.bottom);
    for (const auto& [rank, s] : f.upper) column.emplace_back(ag_rows[rank - 1], s);
    std::vector<int> next;
    if (is_ag(f.bottom)) {
      next.reserve(ag_rows.size() + 1);
      next.push_back(m);
      next.insert(next.end(), ag_rows.begin(), ag_rows.end());
    } else {
      std::size_t u = 0;
      for (std::size_t i = 0; i < ag_rows.size(); ++i) {
        const bool hit = u < f.upper.size() && f.upper[u].first == static_cast<int>(i) + 1;
        if (hit && is_bd(f.upper[u].second)) {
          ++u;
          continue;
        }
        if (hit) ++u;
        next.push_back(ag_rows[i]);
      }
    }
    ag_rows = std::move(next);
    columns.push_back(std::move(column));
    size = m;
  }

  Tableau materialize() const {
    std::vector<Entry> entries;
    for (int m = 1; m <= size; ++m)
      for (const auto& [row, s] : columns[m - 1]) entries.push_back({{row, size + 1 - m}, s});
    return Tableau(size, std::move(entries));
  }
};

// Fills for every r up to a bound, built up front so references stay valid
// during recursion.
class FillCache {
 public:
  explicit FillCache(int max_r) {
    for (int r = 0; r <= max_r; ++r) fills_.push_back(legal_fills(r));
  }
  const std::vector<ColumnFill>& get(int r) const { return fills_.at(r); }

 private:
  std::vector<std::vector<ColumnFill>> fills_;
};

template <typename Visitor>
void grow(GrowthPath& path, int n, const FillCache& cache, Visitor& visit,
          std::uint64_t& count) {
  if (path.size == n) {
    visit(path.materialize());
    ++count;
    return;
  }
  const std::vector<int> saved = path.ag_rows;
  for (const auto& f : cache.get(static_cast<int>(saved.size()))) {
    path.push(f);
    grow(path, n, cache, visit, count);
    path.columns.pop_back();
    path.size -= 1;
    path.ag_rows = saved;
  }
}

}  // namespace detail

/// Depth-first over growth choices in legal_fills order; visits each size-n
/// tableau exactly once and returns the number visited. Practical for n <= 7.
template <typename Visitor>
Integer enumerate_all(int n, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  const detail::FillCache cache(n);
  detail::GrowthPath root;
  std::uint64_t count = 0;
  detail::grow(root, n, cache, visit, count);
  return Integer(static_cast<unsigned long>(count));
}

/// Parallel enumeration over the growth prefixes of depth min(n, 2). The
/// visitor is called concurrently as visit(tableau, worker_index) and must be
/// safe for that; give each worker its own accumulator.
template <typename Visitor>
Integer enumerate_parallel(int n, unsigned workers, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  if (workers == 0) workers = 1;
  const int depth = n < 2 ? n : 2;
  std::vector<detail::GrowthPath> prefixes{detail::GrowthPath{}};
  {
    const detail::FillCache cache(depth);
    for (int d = 0; d < depth; ++d) {
      std::vector<detail::GrowthPath> next;
      for (const auto& p : prefixes) {
        for (const auto& f : cache.get(static_cast<int>(p.ag_rows.size()))) {
          next.push_back(p);
          next.back().push(f);
        }
      }
      prefixes = std::move(next);
    }
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::uint64_t> counts(workers, 0);
  const detail::FillCache cache(n);
  auto work = [&](unsigned w) {
    auto bound = [&](const Tableau& t) { visit(t, static_cast<std::size_t>(w)); };
    for (std::size_t i = cursor++; i < prefixes.size(); i = cursor++) {
      detail::GrowthPath p = prefixes[i];
      detail::grow(p, n, cache, bound, counts[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  Integer total = 0;
  for (auto c : counts) total += static_cast<unsigned long>(c);
  return total;
}

}  // namespace staircase
