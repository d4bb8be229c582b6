#pragma once

// Self-checks that tie the enumerator, the exact laws, the triangles, the
// sampler and the ASEP solve together. Each check returns data; the CLI and
// the acceptance binary decide how to print it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "asep.hpp"
#include "core.hpp"
#include "counting.hpp"
#include "enumerator.hpp"
#include "exact.hpp"
#include "polyengine.hpp"
#include "sampler.hpp"
#include "stats.hpp"

namespace staircase {

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> measured;
  double seconds = 0;

  void note(std::string key, std::string value) { measured.emplace_back(std::move(key), std::move(value)); }
  template <typename T>
  void note(std::string key, T value) requires std::is_arithmetic_v<T> {
    std::ostringstream os;
    os.precision(6);
    os << value;
    measured.emplace_back(std::move(key), os.str());
  }
};

/// Histograms of every statistic over all tableaux of one size.
struct EnumerationCensus {
  int n = 0;
  Integer count = 0;
  std::vector<Integer> r, delta, gamma, a_diag, b_diag;
  std::uint64_t row_identity_failures = 0;
  std::uint64_t invalid = 0;
  double seconds = 0;
};

inline EnumerationCensus enumeration_census(int n, bool validate_each = true) {
  EnumerationCensus c;
  c.n = n;
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint64_t> r(size), d(size), g(static_cast<std::size_t>(n) * (n + 1) / 2 + 1), a(size), b(size);
  const auto t0 = std::chrono::steady_clock::now();
  c.count = enumerate_all(n, [&](const Tableau& t) {
    if (validate_each && !validate(t).ok()) ++c.invalid;
    const StatVector s = statistics(t);
    ++r[s.r];
    ++d[s.delta];
    ++g[s.gamma];
    ++a[s.a_diag];
    ++b[s.b_diag];
    if (s.r + s.delta != n) ++c.row_identity_failures;
  });
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto big = [](const std::vector<std::uint64_t>& v) {
    std::vector<Integer> out;
    for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
    return out;
  };
  c.r = big(r);
  c.delta = big(d);
  c.gamma = big(g);
  c.a_diag = big(a);
  c.b_diag = big(b);
  return c;
}

namespace detail {

inline ExactPMF padded(ExactPMF p, std::size_t size) {
  p.probs.resize(std::max(size, p.probs.size()), Rational(0));
  return p;
}

template <typename Fn>
CheckResult timed(std::string id, std::string title, Fn&& body) {
  CheckResult res;
  res.id = std::move(id);
  res.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(res);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace detail

// --- individual checks -----------------------------------------------------

inline CheckResult check_cardinality(const std::vector<EnumerationCensus>& censuses, double time_budget_s = 60) {
  return detail::timed("cardinality", "enumeration count equals 4^n n!", [&](CheckResult& res) {
    res.pass = !censuses.empty();
    for (const auto& c : censuses) {
      const bool ok = c.count == total_count(c.n) && c.invalid == 0 && c.seconds <= time_budget_s;
      res.note("n=" + std::to_string(c.n), to_string(c.count) + " in " + std::to_string(c.seconds) + "s");
      res.pass = res.pass && ok;
    }
  });
}

inline CheckResult check_r_distribution(const std::vector<EnumerationCensus>& censuses) {
  return detail::timed("r-distribution", "histogram of r equals the product generating function", [&](CheckResult& res) {
    res.pass = !censuses.empty();
    for (const auto& c : censuses) {
      const bool ok = pmf_from_counts(0, c.r) == detail::padded(pmf_from_polynomial(pgf_r(c.n)), c.r.size());
      res.note("n=" + std::to_string(c.n), ok ? "exact" : "mismatch");
      res.pass = res.pass && ok;
    }
  });
}

inline CheckResult check_bernoulli(int n_max) {
  return detail::timed("bernoulli", "Bernoulli convolution equals the generating function", [&](CheckResult& res) {
    res.pass = true;
    for (int n = 1; n <= n_max; ++n)
      if (!(dist_r(n) == pmf_from_polynomial(pgf_r(n)))) {
        res.pass = false;
        res.detail = "mismatch at n=" + std::to_string(n);
        break;
      }
    res.note("n_max", n_max);
  });
}

inline CheckResult check_moments(int n_max) {
  return detail::timed("moments", "mean and variance of r and Delta from exact pmfs", [&](CheckResult& res) {
    res.pass = true;
    for (int n = 1; n <= n_max && res.pass; ++n) {
      const HarmonicPair h = harmonic(n);
      const Moments r = moments_of(dist_r(n));
      const Moments d = moments_of(dist_delta(n));
      const bool ok = r == Moments{h.h1 / 2, h.h1 / 2 - h.h2 / 4} && r == moments_r(n) &&
                      d.mean == Rational(n) - h.h1 / 2 && d == moments_delta(n) && dist_gamma(n) == dist_delta(n);
      if (!ok) {
        res.pass = false;
        res.detail = "mismatch at n=" + std::to_string(n);
      }
    }
    res.note("n_max", n_max);
    res.note("E r_n_max", to_string(moments_r(n_max).mean));
  });
}

inline CheckResult check_row_identity(const std::vector<EnumerationCensus>& censuses) {
  return detail::timed("row-identity", "r + delta = n on every tableau", [&](CheckResult& res) {
    res.pass = !censuses.empty();
    std::uint64_t failures = 0;
    Integer visited = 0;
    for (const auto& c : censuses) {
      failures += c.row_identity_failures;
      visited += c.count;
    }
    res.pass = res.pass && failures == 0;
    res.note("visited", to_string(visited));
    res.note("failures", failures);
  });
}

inline CheckResult check_diagonal_distribution(const std::vector<EnumerationCensus>& censuses) {
  return detail::timed("diagonal-distribution", "histograms of A_n and B_n equal V(n,.)/(2^n n!)", [&](CheckResult& res) {
    res.pass = !censuses.empty();
    for (const auto& c : censuses) {
      const ExactPMF v = dist_A(c.n);
      const bool a_ok = pmf_from_counts(0, c.a_diag) == v;
      const bool b_ok = pmf_from_counts(0, c.b_diag) == v && dist_B(c.n) == v;
      res.note("n=" + std::to_string(c.n), std::string(a_ok ? "A exact" : "A mismatch") + ", " +
                                               (b_ok ? "B exact" : "B mismatch"));
      res.pass = res.pass && a_ok && b_ok;
    }
  });
}

/// Checks mean n/2 and variance (n+1)/12 for n_first <= n <= n_max. The
/// variance formula is false at n = 1, so n_first = 1 fails.
inline CheckResult check_diagonal_moments(int n_first, int n_max) {
  return detail::timed("diagonal-moments", "mean n/2 and variance (n+1)/12 from V rows", [&](CheckResult& res) {
    std::vector<int> mean_bad, var_bad;
    for (int n = n_first; n <= n_max; ++n) {
      const Moments m = moments_of(dist_A(n));
      if (m.mean != make_rational(static_cast<long>(n), 2L)) mean_bad.push_back(n);
      if (m.variance != make_rational(static_cast<long>(n) + 1, 12L)) var_bad.push_back(n);
    }
    res.pass = mean_bad.empty() && var_bad.empty();
    auto list = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
      return s.empty() ? std::string("none") : s;
    };
    res.note("range", std::to_string(n_first) + ".." + std::to_string(n_max));
    res.note("mean mismatches", list(mean_bad));
    res.note("variance mismatches", list(var_bad));
    res.note("var A_1", to_string(moments_of(dist_A(1)).variance));
    if (!var_bad.empty()) res.detail = "variance (n+1)/12 fails at n = " + list(var_bad);
  });
}

inline CheckResult check_triangles(int n_paths, int n_max) {
  return detail::timed("triangles", "c, V, W, a triangles agree with their cross-checks", [&](CheckResult& res) {
    const TriangleC c = build_c(n_max);
    bool paths = true;
    for (int n = 0; n <= n_paths; ++n)
      for (int k = 0; k <= n; ++k) paths = paths && path_weight_oracle(n, k) == c(n, k);
    const TriangleV v = build_V(n_max);
    const TriangleW w = build_W(n_max);
    bool explicit_ok = true;
    for (int n = 0; n <= n_max; ++n)
      for (int m = 0; m <= n; ++m) explicit_ok = explicit_ok && V_explicit(w, n, m) == v(n, m);
    bool whitney = true;
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k)
        whitney = whitney && c(n, k)(Rational(1)) == Rational(power(2L, k) * factorial(k) * w(n, k));
    const bool a_eq_c = build_a(n_max) == c;
    bool pgf = true;
    for (int n = 1; n <= n_max; ++n) {
      const ZPoly A = pgf_A(v, n);
      pgf = pgf && pgf_B(c, n) == A && pgf_A_from_c(c, n) == A;
    }
    res.pass = paths && explicit_ok && whitney && a_eq_c && pgf;
    res.note("c vs paths (n<=" + std::to_string(n_paths) + ")", paths ? "equal" : "differ");
    res.note("V vs explicit (n<=" + std::to_string(n_max) + ")", explicit_ok ? "equal" : "differ");
    res.note("c(1) vs 2^k k! W", whitney ? "equal" : "differ");
    res.note("a vs c", a_eq_c ? "equal" : "differ");
    res.note("pgf_B vs pgf_A", pgf ? "equal" : "differ");
  });
}

inline CheckResult check_series(std::size_t order) {
  return detail::timed("series", "bivariate series coefficients and pole constants", [&](CheckResult& res) {
    const SeriesCheckReport rep = bivariate_series_check(order);
    const PoleConstants pc = pole_constants();
    const bool poles = pc.r0 == 1 && pc.r1 == make_rational(-1L, 2L) && pc.r2 == make_rational(1L, 6L);
    res.pass = rep.ok && poles;
    res.note("order", static_cast<long>(order));
    if (rep.first_mismatch)
      res.note("first mismatch", std::to_string(rep.first_mismatch->first) + "," +
                                     std::to_string(rep.first_mismatch->second));
    res.note("r(0), r'(0), r''(0)", to_string(pc.r0) + ", " + to_string(pc.r1) + ", " + to_string(pc.r2));
  });
}

inline CheckResult check_sampler_exactness(int n_max) {
  return detail::timed("sampler-exactness", "probability_of is 1/(4^n n!) for every tableau", [&](CheckResult& res) {
    res.pass = true;
    std::uint64_t audited = 0;
    for (int n = 1; n <= n_max; ++n) {
      const Rational target = make_rational(Integer(1), total_count(n));
      std::uint64_t bad = 0;
      enumerate_all(n, [&](const Tableau& t) {
        ++audited;
        if (probability_of(n, t) != target) ++bad;
      });
      if (bad) res.pass = false;
      res.note("n=" + std::to_string(n), bad ? std::to_string(bad) + " wrong" : "all exact");
    }
    res.note("audited", audited);
  });
}

struct SamplerStatsConfig {
  int chi_n = 5;
  std::size_t chi_draws = 100'000;
  double significance = 0.001;
  int ks_n = 2000;
  std::size_t ks_draws = 100'000;
  double ks_threshold = 0.01;
  std::uint64_t seed = 20240601;
  bool run_ks = true;
};

inline CheckResult check_sampler_statistics(const SamplerStatsConfig& cfg) {
  return detail::timed("sampler-statistics", "sampled r passes chi-square; sampled A_n is close to normal",
                       [&](CheckResult& res) {
    const auto stats = sample_statistics(cfg.chi_n, cfg.chi_draws, cfg.seed);
    std::vector<long> rs;
    rs.reserve(stats.size());
    for (const auto& s : stats) rs.push_back(s.r);
    const ChiSquareResult chi = chi_square_test(rs, dist_r(cfg.chi_n), cfg.significance);
    res.note("chi-square", chi.statistic);
    res.note("chi-square critical", chi.critical);
    res.note("chi-square df", chi.df);
    res.pass = chi.pass;
    if (cfg.run_ks) {
      const auto big = sample_statistics(cfg.ks_n, cfg.ks_draws, cfg.seed + 1);
      std::vector<long> as;
      as.reserve(big.size());
      for (const auto& s : big) as.push_back(s.a_diag);
      const double mean = cfg.ks_n / 2.0;
      const double sd = std::sqrt((cfg.ks_n + 1) / 12.0);
      const CltReport clt = clt_check(as, mean, sd);
      res.note("ks", clt.ks_statistic);
      res.note("ks threshold", cfg.ks_threshold);
      res.note("ks continuity-corrected", clt.ks_lattice);
      res.note("max bin deviation", clt.max_bin_dev);
      std::sort(as.begin(), as.end());
      std::size_t largest = 0;
      for (std::size_t i = 0, j = 0; i < as.size(); i = j) {
        while (j < as.size() && as[j] == as[i]) ++j;
        largest = std::max(largest, j - i);
      }
      res.note("largest atom / 2", 0.5 * static_cast<double>(largest) / static_cast<double>(as.size()));
      res.pass = res.pass && clt.ks_statistic < cfg.ks_threshold;
      if (!(clt.ks_statistic < cfg.ks_threshold))
        res.detail = "KS against the continuous normal cannot drop below half the largest atom of A_n";
    }
  });
}

inline CheckResult check_asep(int n_max, double tol) {
  return detail::timed("asep", "stationary law equals Z_sigma / Z_n on the pinned grid", [&](CheckResult& res) {
    res.pass = true;
    const auto grid = pinned_parameter_grid();
    double worst = 0;
    for (int n = 1; n <= n_max; ++n) {
      const WeightCensus census = weight_census(n);
      for (const auto& p : grid) {
        const SteadyStateReport rep = verify_steady_state(census, p, tol);
        worst = std::max(worst, rep.max_deviation);
        res.pass = res.pass && rep.pass;
      }
    }
    bool exact_one = true;
    const WeightCensus one = weight_census(1);
    for (const auto& p : grid) exact_one = exact_one && verify_steady_state(one, p, tol, true).exact_max_deviation == 0;
    res.pass = res.pass && exact_one;
    res.note("max deviation", worst);
    res.note("tolerance", tol);
    res.note("n=1 exact", exact_one ? "zero deviation" : "nonzero deviation");
  });
}

// --- suite -----------------------------------------------------------------

struct SuiteConfig {
  int n_max = 5;
  double tol = 1e-10;
  std::uint64_t seed = 20240601;
};

/// Every check at sizes scaled to n_max (at most 6). The large-n sampler run
/// belongs to the acceptance binary, not to this suite.
inline std::vector<CheckResult> verify_suite(const SuiteConfig& cfg) {
  if (cfg.n_max < 1 || cfg.n_max > 6) throw std::invalid_argument("verify suite needs 1 <= n_max <= 6");
  std::vector<EnumerationCensus> all;
  for (int n = 1; n <= cfg.n_max; ++n) all.push_back(enumeration_census(n, n <= 5));
  std::vector<EnumerationCensus> small(all.begin(), all.begin() + std::min(cfg.n_max, 5));
  std::vector<CheckResult> out;
  out.push_back(check_cardinality(all));
  out.push_back(check_r_distribution(small));
  out.push_back(check_bernoulli(10 * cfg.n_max));
  out.push_back(check_moments(10 * cfg.n_max));
  out.push_back(check_row_identity(small));
  out.push_back(check_diagonal_distribution(small));
  out.push_back(check_diagonal_moments(2, 40 * cfg.n_max));
  out.push_back(check_triangles(std::min(cfg.n_max + 1, 7), 6 * cfg.n_max));
  out.push_back(check_series(static_cast<std::size_t>(2 * cfg.n_max + 2)));
  out.push_back(check_sampler_exactness(std::min(cfg.n_max, 4)));
  SamplerStatsConfig s;
  s.chi_n = std::min(cfg.n_max, 5);
  s.chi_draws = 100'000;
  s.seed = cfg.seed;
  s.run_ks = false;
  out.push_back(check_sampler_statistics(s));
  out.push_back(check_asep(std::min(cfg.n_max, 4), cfg.tol));
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace staircase
