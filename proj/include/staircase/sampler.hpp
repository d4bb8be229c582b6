#pragma once

// Exactly uniform random staircase tableaux by sequential column choice.
//
// With k columns still to add and r AG rows, the completion counts have the
// closed form N(k, r) = 4^k k! (2k+1)^r. Writing x = 2k-1 and
// b_j = C(r,j) 2^j x^(r-j) / (x+2)^r (a Binomial(r, 2/(x+2)) law), the move
// probabilities become
//   P(Up)      = x b_0 / (x+1)
//   P(Down(j)) = (b_j + x b_{j+1}) / (x+1),
// a two-component mixture: with probability 1/(x+1) take Down(J), otherwise
// Up if J = 0 and Down(J-1) if not, where J ~ Binomial(r, 2/(x+2)).
//
// J is drawn by inversion against a lazily refined uniform. Each CDF
// comparison is first tried in double precision with a wide safety margin
// and otherwise settled exactly in integers, so the result is always the one
// the exact comparison gives and exact_only mode reproduces it draw for draw.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "counting.hpp"
#include "enumerator.hpp"
#include "exact.hpp"
#include "random.hpp"

namespace staircase {

/// N(k, r) in closed form.
inline Integer completion_closed_form(int k, int r) {
  if (k < 0 || r < 0) throw std::invalid_argument("completion index must be non-negative");
  return power(4L, k) * factorial(k) * power(2L * k + 1, r);
}

/// Probability that the sampler takes `move` with k steps left and r AG rows,
/// from the mixture form above.
inline Rational move_probability(int k, int r, Move move) {
  if (k < 1 || r < 0) throw std::invalid_argument("move_probability needs k >= 1, r >= 0");
  const long x = 2L * k - 1;
  auto b = [&](int j) -> Rational {
    if (j < 0 || j > r) return Rational(0);
    return make_rational(binomial(r, j) * power(2L, j) * power(x, r - j), power(x + 2, r));
  };
  const Rational one_over = make_rational(1L, x + 1);
  if (move.kind == Move::Kind::Up) return Rational(x) * b(0) * one_over;
  if (move.k < 0 || move.k > r) throw std::invalid_argument("Down(j) requires 0 <= j <= r");
  return (b(move.k) + Rational(x) * b(move.k + 1)) * one_over;
}

/// The same probability from the completion table: mult * N(k-1, r') / N(k, r).
inline Rational move_probability(const CompletionTable& table, int k, int r, Move move) {
  return make_rational(multiplicity(r, move) * table.at(k - 1, move.next_r(r)), table.at(k, r));
}

struct SamplerOptions {
  /// Settle every CDF comparison in exact arithmetic.
  bool exact_only = false;
};

namespace detail {

// V = 0.w1 w2 w3 ... in base 2^64, with words drawn on demand.
class LazyUniform {
 public:
  explicit LazyUniform(Rng& rng) : rng_(rng) { words_.push_back(rng_()); }

  /// Lower end of the first-word interval [u, u + 2^-64).
  double approx() const { return std::ldexp(static_cast<double>(words_[0]), -64); }

  /// Exact test of V < num / den.
  bool less_than(const Integer& num, const Integer& den) {
    for (std::size_t used = 1;; ++used) {
      while (words_.size() < used) words_.push_back(rng_());
      Integer prefix = 0;
      for (std::size_t i = 0; i < used; ++i) {
        prefix <<= 64;
        prefix += to_integer(words_[i]);
      }
      Integer target = num;
      target <<= static_cast<mp_bitcnt_t>(64 * used);
      if ((prefix + 1) * den <= target) return true;
      if (prefix * den >= target) return false;
    }
  }

 private:
  static Integer to_integer(std::uint64_t w) {
    Integer v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
    return v;
  }
  Rng& rng_;
  std::vector<std::uint64_t> words_;
};

inline constexpr double kFastMargin = 1e-9;

// J ~ Binomial(r, 2/(x+2)) by inversion.
inline int draw_binomial(Rng& rng, int r, long x, bool exact_only, std::uint64_t& fallbacks) {
  if (r == 0) return 0;
  LazyUniform v(rng);
  const double u_lo = v.approx();
  const double u_hi = u_lo + std::ldexp(1.0, -64);
  const double log_ratio = std::log(2.0 / static_cast<double>(x));
  double log_b = static_cast<double>(r) * std::log1p(-2.0 / static_cast<double>(x + 2));
  double cdf = 0;
  Integer exact_num;  // lazily built sum_{i<=j} C(r,i) 2^i x^(r-i)
  int exact_upto = -1;
  Integer exact_den;
  for (int j = 0; j < r; ++j) {
    cdf += std::exp(log_b);
    if (!exact_only) {
      if (u_hi < cdf - kFastMargin) return j;
      if (u_lo > cdf + kFastMargin) {
        log_b += std::log(static_cast<double>(r - j) / static_cast<double>(j + 1)) + log_ratio;
        continue;
      }
    }
    if (exact_upto < 0) {
      exact_num = 0;
      exact_den = power(x + 2, r);
    }
    for (int i = exact_upto + 1; i <= j; ++i) exact_num += binomial(r, i) * power(2L, i) * power(x, r - i);
    exact_upto = j;
    if (!exact_only) ++fallbacks;
    if (v.less_than(exact_num, exact_den)) return j;
    log_b += std::log(static_cast<double>(r - j) / static_cast<double>(j + 1)) + log_ratio;
  }
  return r;
}

// Uniform m-subset of {1..r} by Floyd's method, returned sorted.
inline void draw_subset(Rng& rng, int r, int m, std::vector<int>& out) {
  out.clear();
  for (int i = r - m + 1; i <= r; ++i) {
    const int t = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i)));
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
    else
      out.push_back(i);
  }
  std::sort(out.begin(), out.end());
}

struct StatSink {
  StatVector s;
  void push(const ColumnFill& f) {
    if (is_ag(f.bottom)) {
      ++s.gamma;
      ++s.a_diag;
    } else {
      ++s.delta;
      ++s.b_diag;
    }
    for (const auto& [rank, sym] : f.upper) {
      if (is_ag(sym))
        ++s.gamma;
      else
        ++s.delta;
    }
  }
};

struct TableauSink {
  GrowthPath path;
  void push(const ColumnFill& f) { path.push(f); }
};

}  // namespace detail

class UniformSampler {
 public:
  explicit UniformSampler(int n, SamplerOptions options = {}) : n_(n), options_(options) {
    if (n < 1) throw std::invalid_argument("sampler needs n >= 1");
  }

  int n() const { return n_; }

  Tableau sample(Rng& rng) const {
    detail::TableauSink sink;
    run(rng, sink);
    return sink.path.materialize();
  }

  /// Statistics of one draw, consuming the same randomness as sample().
  StatVector sample_statistics(Rng& rng) const {
    detail::StatSink sink;
    sink.s.r = run(rng, sink);
    return sink.s;
  }

  /// Number of CDF comparisons the double-precision path had to hand over.
  std::uint64_t fallbacks() const { return fallbacks_.load(); }

  /// Grows one tableau, feeding each column fill to sink.push; returns the
  /// final AG-row count.
  template <typename Sink>
  int run(Rng& rng, Sink& sink) const {
    int r = 0;
    std::uint64_t fallbacks = 0;
    ColumnFill f;
    std::vector<int> ranks;
    for (int k = n_; k >= 1; --k) {
      const long x = 2L * k - 1;
      const bool plain = uniform_below(rng, static_cast<std::uint64_t>(x + 1)) == 0;
      const int big_j = detail::draw_binomial(rng, r, x, options_.exact_only, fallbacks);
      f.upper.clear();
      if (!plain && big_j == 0) {
        f.bottom = fair_coin(rng) ? GreekSymbol::Gamma : GreekSymbol::Alpha;
        sink.push(static_cast<const ColumnFill&>(f));
        r += 1;
        continue;
      }
      const int j = plain ? big_j : big_j - 1;
      const bool with_ag =
          uniform_below(rng, static_cast<std::uint64_t>(2 * r - j + 1)) < static_cast<std::uint64_t>(2 * (r - j));
      detail::draw_subset(rng, r, with_ag ? j + 1 : j, ranks);
      const std::size_t bd_slots = static_cast<std::size_t>(j);
      const GreekSymbol ag_symbol =
          with_ag ? (fair_coin(rng) ? GreekSymbol::Gamma : GreekSymbol::Alpha) : GreekSymbol::Alpha;
      for (std::size_t i = 0; i < bd_slots; ++i)
        f.upper.emplace_back(ranks[i], fair_coin(rng) ? GreekSymbol::Delta : GreekSymbol::Beta);
      if (with_ag) f.upper.emplace_back(ranks.back(), ag_symbol);
      f.bottom = fair_coin(rng) ? GreekSymbol::Delta : GreekSymbol::Beta;
      sink.push(static_cast<const ColumnFill&>(f));
      r -= j;
    }
    if (fallbacks) fallbacks_ += fallbacks;
    return r;
  }

 private:
  int n_;
  SamplerOptions options_;
  mutable std::atomic<std::uint64_t> fallbacks_{0};
};

/// Draw number `index` of the stream family defined by seed.
inline Tableau sample_uniform(int n, std::uint64_t seed, std::uint64_t index = 0, SamplerOptions options = {}) {
  Rng rng = make_stream(seed, index);
  return UniformSampler(n, options).sample(rng);
}

/// Entry i equals statistics(sample_uniform(n, seed, i)).
inline std::vector<StatVector> sample_statistics(int n, std::size_t count, std::uint64_t seed,
                                                 SamplerOptions options = {}) {
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  const UniformSampler sampler(n, options);
  std::vector<StatVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_stream(seed, i);
    out.push_back(sampler.sample_statistics(rng));
  }
  return out;
}

/// Probability that the sampler produces t, replayed along t's unique growth
/// history with the completion-table move weights.
inline Rational probability_of(int n, const Tableau& t) {
  require_valid(t);
  if (t.size() != n) throw std::invalid_argument("tableau size differs from n");
  std::vector<ColumnFill> fills(static_cast<std::size_t>(n));
  Tableau current = t;
  for (int m = n; m >= 1; --m) {
    auto [parent, fill] = split_first_column(current);
    fills[static_cast<std::size_t>(m - 1)] = std::move(fill);
    current = std::move(parent);
  }
  const CompletionTable table(n);
  Rational p = 1;
  int r = 0;
  for (int m = 1; m <= n; ++m) {
    const ColumnFill& f = fills[static_cast<std::size_t>(m - 1)];
    const int k = n - m + 1;
    const Rational half = make_rational(1L, 2L);
    if (is_ag(f.bottom)) {
      p *= move_probability(table, k, r, Move::up()) * half;
    } else {
      const int j = f.bd_upper();
      p *= move_probability(table, k, r, Move::down(j));
      if (f.has_ag_upper())
        p *= make_rational(2L * (r - j), 2L * r - j + 1) / binomial(r, j + 1) * half;
      else
        p *= make_rational(static_cast<long>(j) + 1, 2L * r - j + 1) / binomial(r, j);
      p *= power(half, static_cast<unsigned long>(j)) * half;
    }
    r = f.next_r(r);
  }
  return p;
}

}  // namespace staircase
