#pragma once

// Exact extension multiplicities and completion counts.
//
// A tableau with r AG rows has 4 * 3^r one-column extensions. Two of them
// (AG symbol at the bottom) raise r by one; for 0 <= k <= r exactly
// 2^(k+1) * (2 C(r,k+1) + C(r,k)) lower it by k.

#include <stdexcept>
#include <vector>

#include "exact.hpp"

namespace staircase {

struct Move {
  enum class Kind { Up, Down };
  Kind kind = Kind::Up;
  int k = 0;  // amount r drops by, for Down

  static constexpr Move up() { return {Kind::Up, 0}; }
  static constexpr Move down(int k) { return {Kind::Down, k}; }

  int next_r(int r) const { return kind == Kind::Up ? r + 1 : r - k; }
  friend bool operator==(const Move&, const Move&) = default;
};

inline Integer multiplicity(int r, Move move) {
  if (r < 0) throw std::invalid_argument("negative AG-row count");
  if (move.kind == Move::Kind::Up) return Integer(2);
  if (move.k < 0 || move.k > r) throw std::invalid_argument("Down(k) requires 0 <= k <= r");
  const int k = move.k;
  return power(2L, k + 1) * (2 * binomial(r, k + 1) + binomial(r, k));
}

/// N(k, r): number of ways to grow a tableau with r AG rows by k more columns.
class CompletionTable {
 public:
  explicit CompletionTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("completion table needs n >= 1");
    std::vector<std::vector<Integer>> mult(n + 1);
    for (int r = 0; r <= n; ++r)
      for (int j = 0; j <= r; ++j) mult[r].push_back(multiplicity(r, Move::down(j)));
    // Row k covers r = 0..n-k, the AG counts reachable with k steps to go.
    entries_.resize(n + 1);
    entries_[0].assign(n + 1, Integer(1));
    for (int k = 1; k <= n; ++k) {
      entries_[k].resize(n - k + 1);
      for (int r = 0; r <= n - k; ++r) {
        Integer total = 2 * entries_[k - 1][r + 1];
        for (int j = 0; j <= r; ++j) total += mult[r][j] * entries_[k - 1][r - j];
        entries_[k][r] = std::move(total);
      }
    }
  }

  int n() const { return n_; }

  const Integer& at(int k, int r) const {
    if (k < 0 || k > n_ || r < 0 || r > n_ - k)
      throw std::out_of_range("completion table index out of range");
    return entries_[k][r];
  }

  bool contains(int k, int r) const { return k >= 0 && k <= n_ && r >= 0 && r <= n_ - k; }

 private:
  int n_;
  std::vector<std::vector<Integer>> entries_;
};

inline CompletionTable completions(int n) { return CompletionTable(n); }

inline Integer total_count(int n) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  return tableau_count(static_cast<unsigned long>(n));
}

}  // namespace staircase
