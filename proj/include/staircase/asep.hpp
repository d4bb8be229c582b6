#pragma once

// The n-site asymmetric exclusion process with open boundaries as a
// discrete-time chain on {0,1}^n, and the tableau partition functions that
// give its stationary law.
//
// State bit k (0-based) is site k, site 0 at the left boundary; a set bit is
// an occupied site. This matches TypeWord::bits().

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "core.hpp"
#include "enumerator.hpp"
#include "exact.hpp"

namespace staircase {

struct ASEPParams {
  Rational alpha = 1, beta = 1, gamma = 1, delta = 1, q = 1, u = 1;

  void validate() const {
    for (const Rational* p : {&alpha, &beta, &gamma, &delta, &q, &u})
      if (*p < 0 || *p > 1) throw std::invalid_argument("ASEP parameters must lie in [0, 1]");
  }
  bool all_positive() const { return alpha > 0 && beta > 0 && gamma > 0 && delta > 0 && q > 0 && u > 0; }
  std::string str() const {
    return "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " gamma=" + to_string(gamma) +
           " delta=" + to_string(delta) + " q=" + to_string(q) + " u=" + to_string(u);
  }
};

inline ASEPParams make_params(const std::string& alpha, const std::string& beta, const std::string& gamma,
                              const std::string& delta, const std::string& q, const std::string& u) {
  ASEPParams p{parse_rational(alpha), parse_rational(beta), parse_rational(gamma),
               parse_rational(delta),  parse_rational(q),    parse_rational(u)};
  p.validate();
  return p;
}

/// Five strictly positive settings used by the acceptance run.
inline std::vector<ASEPParams> pinned_parameter_grid() {
  return {
      make_params("1/2", "1/2", "1/4", "1/4", "1/5", "3/5"),
      make_params("1/2", "1/2", "1/2", "1/2", "1/3", "2/3"),
      make_params("1", "1", "1", "1", "1", "1"),
      make_params("3/4", "1/3", "1/7", "2/5", "1/2", "1/4"),
      make_params("1/9", "5/6", "2/3", "1/8", "7/8", "1/10"),
  };
}

inline constexpr int kMaxChainSites = 12;

/// Row-stochastic transition matrix stored as sparse rows with exact entries.
struct ASEPChain {
  int n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;

  std::size_t states() const { return rows.size(); }

  Rational entry(std::uint32_t from, std::uint32_t to) const {
    for (const auto& [j, p] : rows.at(from))
      if (j == to) return p;
    return 0;
  }

  Eigen::MatrixXd dense() const {
    const auto s = static_cast<Eigen::Index>(states());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(s, s);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [j, p] : rows[i]) m(static_cast<Eigen::Index>(i), j) = to_double(p);
    return m;
  }
};

inline ASEPChain build_chain(int n, const ASEPParams& params) {
  if (n < 1 || n > kMaxChainSites) throw std::invalid_argument("chain size must be in 1..12");
  params.validate();
  const Rational pick = make_rational(1L, static_cast<long>(n) + 1);
  ASEPChain chain;
  chain.n = n;
  const std::uint32_t states = std::uint32_t{1} << n;
  chain.rows.resize(states);
  for (std::uint32_t s = 0; s < states; ++s) {
    std::map<std::uint32_t, Rational> out;
    Rational moved = 0;
    auto add = [&](std::uint32_t to, const Rational& p) {
      const Rational w = p * pick;
      if (w == 0) return;
      out[to] += w;
      moved += w;
    };
    const bool first = s & 1U;
    add(s ^ 1U, first ? params.gamma : params.alpha);
    for (int i = 1; i < n; ++i) {
      const bool left = (s >> (i - 1)) & 1U;
      const bool right = (s >> i) & 1U;
      if (left == right) continue;
      const std::uint32_t swapped = s ^ (3U << (i - 1));
      add(swapped, left ? params.u : params.q);
    }
    const bool last = (s >> (n - 1)) & 1U;
    add(s ^ (1U << (n - 1)), last ? params.beta : params.delta);
    const Rational stay = Rational(1) - moved;
    if (stay != 0) out[s] += stay;
    chain.rows[s].assign(out.begin(), out.end());
  }
  return chain;
}

inline void require_irreducible(const ASEPParams& params) {
  if (!params.all_positive())
    throw std::domain_error("chain may be reducible: every parameter must be strictly positive");
}

inline constexpr int kMaxExactSites = 6;

/// Exact stationary law by rational elimination on pi (P - I) = 0, sum pi = 1.
inline std::vector<Rational> stationary_exact(const ASEPChain& chain, const ASEPParams& params) {
  require_irreducible(params);
  if (chain.n > kMaxExactSites) throw std::invalid_argument("exact stationary solve is limited to n <= 6");
  const std::size_t s = chain.states();
  // Unknowns pi_0..pi_{s-1}; equation j is sum_i pi_i (P_ij - [i==j]) = 0,
  // with the last one replaced by the normalization.
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s + 1, Rational(0)));
  for (std::size_t i = 0; i < s; ++i) {
    for (const auto& [j, p] : chain.rows[i]) a[j][i] += p;
    a[i][i] -= 1;
  }
  for (std::size_t i = 0; i < s; ++i) a[s - 1][i] = 1;
  a[s - 1][s] = 1;
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t pivot = col;
    while (pivot < s && a[pivot][col] == 0) ++pivot;
    if (pivot == s) throw std::runtime_error("singular system in exact stationary solve");
    std::swap(a[pivot], a[col]);
    for (std::size_t row = 0; row < s; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t c = col; c <= s; ++c) a[row][c] -= factor * a[col][c];
    }
  }
  std::vector<Rational> pi(s);
  for (std::size_t i = 0; i < s; ++i) pi[i] = a[i][s] / a[i][i];
  return pi;
}

inline constexpr int kMaxDirectSites = 8;

/// max_j |(pi P)_j - pi_j|
inline double stationary_residual(const ASEPChain& chain, const std::vector<double>& pi) {
  std::vector<double> next(pi.size(), 0.0);
  for (std::size_t i = 0; i < chain.rows.size(); ++i)
    for (const auto& [j, p] : chain.rows[i]) next[j] += pi[i] * to_double(p);
  double res = 0;
  for (std::size_t j = 0; j < pi.size(); ++j) res = std::max(res, std::abs(next[j] - pi[j]));
  return res;
}

struct StationaryOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 2'000'000;
};

/// Double-precision stationary law: LU solve for n <= 8, power iteration
/// beyond until the residual drops below the tolerance.
inline std::vector<double> stationary(const ASEPChain& chain, const ASEPParams& params,
                                      StationaryOptions options = {}) {
  require_irreducible(params);
  const std::size_t s = chain.states();
  std::vector<double> pi(s);
  if (chain.n <= kMaxDirectSites) {
    Eigen::MatrixXd a = chain.dense().transpose() - Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(s),
                                                                                static_cast<Eigen::Index>(s));
    a.row(static_cast<Eigen::Index>(s) - 1).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s));
    b(static_cast<Eigen::Index>(s) - 1) = 1;
    const Eigen::VectorXd x = a.partialPivLu().solve(b);
    for (std::size_t i = 0; i < s; ++i) pi[i] = x(static_cast<Eigen::Index>(i));
  } else {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(s);
    for (std::size_t i = 0; i < s; ++i)
      for (const auto& [j, p] : chain.rows[i]) rows[i].emplace_back(j, to_double(p));
    std::fill(pi.begin(), pi.end(), 1.0 / static_cast<double>(s));
    std::vector<double> next(s);
    bool converged = false;
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t i = 0; i < s; ++i)
        for (const auto& [j, p] : rows[i]) next[j] += pi[i] * p;
      double sum = 0, diff = 0;
      for (double v : next) sum += v;
      for (std::size_t j = 0; j < s; ++j) {
        next[j] /= sum;
        diff = std::max(diff, std::abs(next[j] - pi[j]));
      }
      pi.swap(next);
      if (diff < options.tolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("power iteration did not converge");
  }
  if (stationary_residual(chain, pi) >= options.tolerance)
    throw std::runtime_error("stationary solve missed the residual tolerance");
  return pi;
}

// ---------------------------------------------------------------------------
// Partition functions

/// For each type word (as bits), how many tableaux carry each weight monomial.
struct WeightCensus {
  int n = 0;
  std::vector<std::map<WeightMonomial, Integer>> by_type;
};

inline constexpr int kMaxCensusSize = 6;

inline WeightCensus weight_census(int n) {
  if (n < 1 || n > kMaxCensusSize) throw std::invalid_argument("weight census is limited to 1 <= n <= 6");
  std::vector<std::map<WeightMonomial, std::uint64_t>> counts(std::size_t{1} << n);
  enumerate_all(n, [&](const Tableau& t) { counts[type_word(t).bits()][weight(t)] += 1; });
  WeightCensus c{n, std::vector<std::map<WeightMonomial, Integer>>(counts.size())};
  for (std::size_t s = 0; s < counts.size(); ++s)
    for (const auto& [w, k] : counts[s]) c.by_type[s][w] = Integer(static_cast<unsigned long>(k));
  return c;
}

inline Rational evaluate(const WeightMonomial& w, const ASEPParams& p) {
  const Rational* vars[6] = {&p.alpha, &p.beta, &p.gamma, &p.delta, &p.u, &p.q};
  Rational v = 1;
  for (int i = 0; i < 6; ++i) v *= power(*vars[i], static_cast<unsigned long>(w.exponents[i]));
  return v;
}

struct PartitionFunctions {
  Rational total;                 // Z_n
  std::vector<Rational> by_type;  // Z_sigma indexed by type bits
};

inline PartitionFunctions partition_functions(const WeightCensus& census, const ASEPParams& params) {
  params.validate();
  PartitionFunctions z{Rational(0), std::vector<Rational>(census.by_type.size(), Rational(0))};
  for (std::size_t s = 0; s < census.by_type.size(); ++s) {
    for (const auto& [w, k] : census.by_type[s]) z.by_type[s] += Rational(k) * evaluate(w, params);
    z.total += z.by_type[s];
  }
  return z;
}

inline PartitionFunctions partition_functions(int n, const ASEPParams& params) {
  return partition_functions(weight_census(n), params);
}

struct SteadyStateReport {
  int n = 0;
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
  std::vector<double> stationary;
  std::vector<Rational> predicted;  // Z_sigma / Z_n
  bool exact = false;               // stationary solved in rational arithmetic
  Rational exact_max_deviation = 0;
};

inline SteadyStateReport verify_steady_state(const WeightCensus& census, const ASEPParams& params, double tol,
                                             bool exact = false) {
  require_irreducible(params);
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const int n = census.n;
  const ASEPChain chain = build_chain(n, params);
  const PartitionFunctions z = partition_functions(census, params);
  SteadyStateReport rep;
  rep.n = n;
  rep.tolerance = tol;
  rep.exact = exact;
  for (const auto& zs : z.by_type) rep.predicted.push_back(zs / z.total);
  if (exact) {
    const std::vector<Rational> pi = stationary_exact(chain, params);
    for (std::size_t s = 0; s < pi.size(); ++s) {
      const Rational d = abs(pi[s] - rep.predicted[s]);
      if (d > rep.exact_max_deviation) rep.exact_max_deviation = d;
      rep.stationary.push_back(to_double(pi[s]));
    }
    rep.max_deviation = to_double(rep.exact_max_deviation);
  } else {
    rep.stationary = stationary(chain, params);
    for (std::size_t s = 0; s < rep.stationary.size(); ++s)
      rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.stationary[s] - to_double(rep.predicted[s])));
  }
  rep.pass = rep.max_deviation < tol;
  return rep;
}

inline SteadyStateReport verify_steady_state(int n, const ASEPParams& params, double tol, bool exact = false) {
  return verify_steady_state(weight_census(n), params, tol, exact);
}

}  // namespace staircase
