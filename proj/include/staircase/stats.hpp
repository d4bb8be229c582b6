#pragma once

// Exact laws of the five tableau statistics under the uniform measure, and
// the floating-point goodness-of-fit checks used against sampled data.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "exact.hpp"
#include "polyengine.hpp"
#include "random.hpp"

namespace staircase {

/// Probabilities of the values offset, offset+1, ...
struct ExactPMF {
  long offset = 0;
  std::vector<Rational> probs;

  long min_value() const { return offset; }
  long max_value() const { return offset + static_cast<long>(probs.size()) - 1; }
  Rational at(long x) const {
    if (x < offset || x > max_value()) return Rational(0);
    return probs[static_cast<std::size_t>(x - offset)];
  }
  Rational total() const {
    Rational s = 0;
    for (const auto& p : probs) s += p;
    return s;
  }
  Rational mean() const {
    Rational s = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) s += probs[i] * Rational(offset + static_cast<long>(i));
    return s;
  }
  Rational variance() const {
    const Rational mu = mean();
    Rational s = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const Rational d = Rational(offset + static_cast<long>(i)) - mu;
      s += probs[i] * d * d;
    }
    return s;
  }
  friend bool operator==(const ExactPMF&, const ExactPMF&) = default;
};

struct Moments {
  Rational mean;
  Rational variance;
  friend bool operator==(const Moments&, const Moments&) = default;
};

inline Moments moments_of(const ExactPMF& p) { return {p.mean(), p.variance()}; }

inline ExactPMF pmf_from_polynomial(const ZPoly& p) {
  ExactPMF out;
  out.probs = p.coefficients();
  if (out.probs.empty()) out.probs.push_back(Rational(0));
  return out;
}

/// Turns a histogram of counts over values offset.. into an exact pmf.
inline ExactPMF pmf_from_counts(long offset, const std::vector<Integer>& counts) {
  Integer total = 0;
  for (const auto& c : counts) total += c;
  if (total == 0) throw std::invalid_argument("empty histogram");
  ExactPMF out{offset, {}};
  for (const auto& c : counts) out.probs.push_back(make_rational(c, total));
  return out;
}

// --- r_n -------------------------------------------------------------------

struct HarmonicPair {
  Rational h1;  // H_n
  Rational h2;  // H_n^(2)
};

inline HarmonicPair harmonic(int n) {
  HarmonicPair h{Rational(0), Rational(0)};
  for (long k = 1; k <= n; ++k) {
    h.h1 += make_rational(1L, k);
    h.h2 += make_rational(1L, k * k);
  }
  return h;
}

/// prod_{k=1..n} (z + 2k - 1) / (2k)
inline ZPoly pgf_r(int n) {
  if (n < 1) throw std::invalid_argument("pgf_r needs n >= 1");
  ZPoly p(Rational(1));
  for (long k = 1; k <= n; ++k)
    p *= ZPoly::linear(make_rational(2 * k - 1, 2 * k), make_rational(1L, 2 * k));
  return p;
}

/// Law of J_1 + ... + J_n with independent J_k ~ Bernoulli(1/(2k)).
inline ExactPMF dist_r(int n) {
  if (n < 1) throw std::invalid_argument("dist_r needs n >= 1");
  std::vector<Rational> p{Rational(1)};
  for (long k = 1; k <= n; ++k) {
    const Rational one = make_rational(1L, 2 * k);
    const Rational zero = Rational(1) - one;
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i] * zero;
      next[i + 1] += p[i] * one;
    }
    p = std::move(next);
  }
  return {0, std::move(p)};
}

inline Moments moments_r(int n) {
  if (n < 1) throw std::invalid_argument("moments_r needs n >= 1");
  const HarmonicPair h = harmonic(n);
  return {h.h1 / 2, h.h1 / 2 - h.h2 / 4};
}

// --- Delta_n and Gamma_n ---------------------------------------------------

inline ExactPMF dist_delta(int n) {
  const ExactPMF r = dist_r(n);
  ExactPMF d{0, std::vector<Rational>(r.probs.rbegin(), r.probs.rend())};
  return d;
}

inline ExactPMF dist_gamma(int n) { return dist_delta(n); }

inline Moments moments_delta(int n) {
  const Moments m = moments_r(n);
  return {Rational(n) - m.mean, m.variance};
}

// --- A_n and B_n -----------------------------------------------------------

inline ExactPMF dist_A(int n) {
  if (n < 1) throw std::invalid_argument("dist_A needs n >= 1");
  const std::vector<Integer> row = V_row(n);
  const Integer denom = signed_permutation_count(static_cast<unsigned long>(n));
  ExactPMF out;
  Integer sum = 0;
  for (std::size_t m = 0; m < row.size(); ++m) {
    if (row[m] != row[row.size() - 1 - m]) throw std::logic_error("V row lost its symmetry");
    sum += row[m];
    out.probs.push_back(make_rational(row[m], denom));
  }
  if (sum != denom) throw std::logic_error("V row does not sum to 2^n n!");
  return out;
}

/// From the B_n generating function; builds polynomial triangles, so keep
/// n to a few dozen.
inline ExactPMF dist_B(int n) {
  if (n < 1) throw std::invalid_argument("dist_B needs n >= 1");
  ExactPMF out = pmf_from_polynomial(pgf_B(n));
  out.probs.resize(static_cast<std::size_t>(n) + 1, Rational(0));
  return out;
}

/// Exact moments of A_n from the V row. For n >= 2 they are checked against
/// mean n/2 and variance (n+1)/12; at n = 1 the variance is 1/4, not 2/12.
inline Moments moments_A(int n) {
  const Moments m = moments_of(dist_A(n));
  const Moments closed{make_rational(static_cast<long>(n), 2L), make_rational(static_cast<long>(n) + 1, 12L)};
  if (n >= 2 && !(m == closed)) throw std::logic_error("diagonal moments disagree with the closed form");
  return m;
}

// --- sampling from an exact pmf --------------------------------------------

/// Exact inverse-transform sampling: one uniform integer below the common
/// denominator per draw.
class PmfSampler {
 public:
  explicit PmfSampler(const ExactPMF& pmf) : offset_(pmf.offset) {
    denom_ = 1;
    for (const auto& p : pmf.probs) mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(), p.get_den_mpz_t());
    Integer acc = 0;
    for (const auto& p : pmf.probs) {
      acc += p.get_num() * (denom_ / p.get_den());
      cumulative_.push_back(acc);
    }
    if (acc != denom_) throw std::invalid_argument("pmf does not sum to one");
  }

  long operator()(Rng& rng) const {
    const Integer u = uniform_below(rng, denom_);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return offset_ + static_cast<long>(it - cumulative_.begin());
  }

 private:
  long offset_;
  Integer denom_;
  std::vector<Integer> cumulative_;
};

inline std::vector<long> sample_pmf(const ExactPMF& pmf, std::size_t count, std::uint64_t seed) {
  const PmfSampler sampler(pmf);
  Rng rng = make_stream(seed, 0);
  std::vector<long> out(count);
  for (auto& x : out) x = sampler(rng);
  return out;
}

// --- goodness of fit -------------------------------------------------------

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

struct CltReport {
  /// Kolmogorov-Smirnov distance of the standardized sample to N(0,1).
  double ks_statistic = 0;
  /// The same distance with each integer atom spread over its unit cell, i.e.
  /// against the continuity-corrected normal. Diagnostic only.
  double ks_lattice = 0;
  /// Max |observed - 1/20| over 20 bins of equal standard-normal mass.
  double max_bin_dev = 0;
  std::size_t samples = 0;
};

inline constexpr std::size_t kCltMinSamples = 10000;

inline CltReport clt_check(std::span<const long> samples, double mean, double sd) {
  if (!(sd > 0) || !std::isfinite(sd)) throw std::invalid_argument("clt_check needs a positive standard deviation");
  if (samples.size() < kCltMinSamples) throw std::invalid_argument("clt_check needs at least 10^4 samples");
  std::vector<long> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  CltReport rep;
  rep.samples = xs.size();

  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    const double below = static_cast<double>(i) / n;
    const double upto = static_cast<double>(j) / n;
    const double x = static_cast<double>(xs[i]);
    const double phi = normal_cdf((x - mean) / sd);
    rep.ks_statistic = std::max({rep.ks_statistic, std::abs(upto - phi), std::abs(below - phi)});
    const double lo = normal_cdf((x - 0.5 - mean) / sd);
    const double hi = normal_cdf((x + 0.5 - mean) / sd);
    rep.ks_lattice = std::max({rep.ks_lattice, std::abs(below - lo), std::abs(upto - hi)});
    i = j;
  }

  const boost::math::normal_distribution<double> std_normal(0.0, 1.0);
  constexpr int kBins = 20;
  std::vector<std::size_t> counts(kBins, 0);
  std::vector<double> edges;  // interior edges, standardized
  for (int b = 1; b < kBins; ++b) edges.push_back(boost::math::quantile(std_normal, static_cast<double>(b) / kBins));
  for (long x : xs) {
    const double z = (static_cast<double>(x) - mean) / sd;
    counts[static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), z) - edges.begin())] += 1;
  }
  for (auto c : counts) rep.max_bin_dev = std::max(rep.max_bin_dev, std::abs(static_cast<double>(c) / n - 1.0 / kBins));
  return rep;
}

struct ChiSquareResult {
  double statistic = 0;
  int df = 0;
  double p_value = 1;
  double critical = 0;  // upper quantile at the requested significance
  bool pass = false;
};

/// Pearson test of integer observations against an exact pmf, one cell per
/// support value. Observations outside the support make the test fail.
inline ChiSquareResult chi_square_test(std::span<const long> observations, const ExactPMF& pmf, double significance) {
  if (observations.empty()) throw std::invalid_argument("chi-square needs observations");
  if (!(significance > 0 && significance < 1)) throw std::invalid_argument("significance must be in (0,1)");
  std::vector<double> observed(pmf.probs.size(), 0.0);
  bool outside = false;
  for (long x : observations) {
    if (x < pmf.min_value() || x > pmf.max_value())
      outside = true;
    else
      observed[static_cast<std::size_t>(x - pmf.offset)] += 1;
  }
  const double total = static_cast<double>(observations.size());
  ChiSquareResult res;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * to_double(pmf.probs[i]);
    if (expected <= 0) {
      if (observed[i] > 0) outside = true;
      continue;
    }
    res.statistic += (observed[i] - expected) * (observed[i] - expected) / expected;
    ++cells;
  }
  res.df = std::max(cells - 1, 1);
  const boost::math::chi_squared_distribution<double> dist(res.df);
  res.p_value = boost::math::cdf(boost::math::complement(dist, res.statistic));
  res.critical = boost::math::quantile(boost::math::complement(dist, significance));
  res.pass = !outside && res.statistic <= res.critical;
  return res;
}

}  // namespace staircase
