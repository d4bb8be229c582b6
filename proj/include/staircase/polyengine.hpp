#pragma once

// Triangles behind the diagonal statistics and their generating functions.
//
//   c[m][l](z)  joint (A_n, r_n) coefficients:
//               c[m+1][l] = (z+2l) c[m][l] + (z+2l-1) c[m][l-1]
//   V(n, m)     type-B Eulerian numbers, P(A_n = m) = V(n,m) / (2^n n!)
//   W(n, k)     Whitney numbers of Dowling lattices (m = 2),
//               c[n][k](1) = 2^k k! W(n,k)
//   a[m][l](z)  the coefficients of the B_n generating function, built by
//               their own recurrence and expected to coincide with c.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "polynomial.hpp"

namespace staircase {

using ZPoly = Polynomial<Rational>;

template <typename T>
class Triangle {
 public:
  Triangle() = default;
  explicit Triangle(int n) : rows_(n + 1) {
    for (int m = 0; m <= n; ++m) rows_[m].assign(m + 1, T(0));
  }
  int n() const { return static_cast<int>(rows_.size()) - 1; }
  const T& operator()(int m, int l) const { return rows_.at(m).at(l); }
  T& operator()(int m, int l) { return rows_.at(m).at(l); }
  const std::vector<T>& row(int m) const { return rows_.at(m); }
  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::vector<std::vector<T>> rows_;
};

using TriangleC = Triangle<ZPoly>;
using TriangleV = Triangle<Integer>;
using TriangleW = Triangle<Integer>;

inline ZPoly z_plus(long a) { return ZPoly::linear(Rational(a), Rational(1)); }

inline TriangleC build_c(int n) {
  if (n < 0) throw std::invalid_argument("triangle size must be non-negative");
  TriangleC c(n);
  c(0, 0) = ZPoly(Rational(1));
  for (int m = 0; m < n; ++m) {
    c(m + 1, 0) = z_plus(0) * c(m, 0);
    c(m + 1, m + 1) = z_plus(2L * m + 1) * c(m, m);
    for (int l = 1; l <= m; ++l)
      c(m + 1, l) = z_plus(2L * l) * c(m, l) + z_plus(2L * (l - 1) + 1) * c(m, l - 1);
  }
  return c;
}

/// Sum over lattice paths from c[0][0] to c[n][k] of the product of move
/// weights: a SW move out of column l weighs z+2l, a SE move z+2l+1.
/// Exponential in n; independent of the recurrence it cross-checks.
inline ZPoly path_weight_oracle(int n, int k) {
  if (n < 0 || n > 8 || k < 0 || k > n) throw std::invalid_argument("path oracle needs 0 <= k <= n <= 8");
  ZPoly total;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    ZPoly w(Rational(1));
    long l = 0;
    for (int step = 0; step < n; ++step) {
      if ((mask >> step) & 1U) {
        w *= z_plus(2 * l + 1);
        ++l;
      } else {
        w *= z_plus(2 * l);
      }
    }
    total += w;
  }
  return total;
}

/// c[m][l](1) directly as integers, from the recurrence at z = 1.
inline Triangle<Integer> build_c_at_one(int n) {
  Triangle<Integer> c(n);
  c(0, 0) = 1;
  for (int m = 0; m < n; ++m) {
    c(m + 1, 0) = c(m, 0);
    c(m + 1, m + 1) = (2L * m + 2) * c(m, m);
    for (int l = 1; l <= m; ++l) c(m + 1, l) = (2L * l + 1) * c(m, l) + (2L * l) * c(m, l - 1);
  }
  return c;
}

inline TriangleV build_V(int n) {
  if (n < 0) throw std::invalid_argument("triangle size must be non-negative");
  TriangleV v(n);
  v(0, 0) = 1;
  for (int r = 1; r <= n; ++r) {
    for (int m = 0; m <= r; ++m) {
      Integer x = 0;
      if (m <= r - 1) x += (2L * m + 1) * v(r - 1, m);
      if (m >= 1) x += (2L * (r - m) + 1) * v(r - 1, m - 1);
      v(r, m) = x;
    }
  }
  for (int r = 0; r <= n; ++r) {
    Integer sum = 0;
    for (int m = 0; m <= r; ++m) {
      if (v(r, m) != v(r, r - m)) throw std::logic_error("V triangle lost its symmetry");
      sum += v(r, m);
    }
    if (v(r, 0) != 1 || sum != signed_permutation_count(r))
      throw std::logic_error("V triangle boundary or row sum broken");
  }
  return v;
}

/// Row n of the V triangle with O(n) memory, for sizes where the full
/// triangle would not fit.
inline std::vector<Integer> V_row(int n) {
  if (n < 0) throw std::invalid_argument("triangle size must be non-negative");
  std::vector<Integer> row{Integer(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<Integer> next(r + 1);
    for (int m = 0; m <= r; ++m) {
      Integer x = 0;
      if (m <= r - 1) x += (2L * m + 1) * row[m];
      if (m >= 1) x += (2L * (r - m) + 1) * row[m - 1];
      next[m] = std::move(x);
    }
    row = std::move(next);
  }
  return row;
}

inline TriangleW build_W(int n) {
  if (n < 0) throw std::invalid_argument("triangle size must be non-negative");
  TriangleW w(n);
  w(0, 0) = 1;
  for (int r = 1; r <= n; ++r) {
    for (int k = 0; k <= r; ++k) {
      Integer x = 0;
      if (k <= r - 1) x += (2L * k + 1) * w(r - 1, k);
      if (k >= 1) x += w(r - 1, k - 1);
      w(r, k) = x;
    }
  }
  const auto c1 = build_c_at_one(n);
  for (int r = 0; r <= n; ++r)
    for (int k = 0; k <= r; ++k)
      if (c1(r, k) != power(2L, k) * factorial(k) * w(r, k))
        throw std::logic_error("c(1) = 2^k k! W identity broken");
  return w;
}

/// V(n, m) as the alternating sum over Whitney numbers.
inline Integer V_explicit(const TriangleW& w, int n, int m) {
  if (n < 0 || n > w.n() || m < 0 || m > n) throw std::invalid_argument("V_explicit index out of range");
  Integer total = 0;
  for (int k = 0; k <= n - m; ++k) {
    Integer term = power(2L, k) * factorial(k) * w(n, k) * binomial(n - k, m);
    if ((n - k - m) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline Integer V_explicit(int n, int m) { return V_explicit(build_W(n), n, m); }

/// sum_m V(n,m) t^m / (2^n n!)
inline ZPoly pgf_A(const TriangleV& v, int n) {
  const Rational scale(Integer(1), signed_permutation_count(n));
  std::vector<Rational> coeffs;
  for (int m = 0; m <= n; ++m) coeffs.push_back(Rational(v(n, m)) * scale);
  return ZPoly(std::move(coeffs));
}

inline ZPoly pgf_A(int n) {
  if (n < 1) throw std::invalid_argument("pgf_A needs n >= 1");
  return pgf_A(build_V(n), n);
}

/// The same generating function assembled from the joint form at z = 1:
/// sum_k (t-1)^(n-k) c[n][k](1) / (2^n n!).
inline ZPoly pgf_A_from_c(const TriangleC& c, int n) {
  const ZPoly t_minus_1 = ZPoly::linear(Rational(-1), Rational(1));
  ZPoly acc;
  for (int k = 0; k <= n; ++k) {
    ZPoly term(c(n, k)(Rational(1)));
    for (int e = 0; e < n - k; ++e) term *= t_minus_1;
    acc += term;
  }
  return acc.scaled(Rational(Integer(1), signed_permutation_count(n)));
}

/// a[m+1][l] = (z+2l) a[m][l] + (z+2l-1) a[m][l-1], a[0][0] = 1, zero outside.
inline TriangleC build_a(int n) {
  if (n < 0) throw std::invalid_argument("triangle size must be non-negative");
  TriangleC a(n);
  a(0, 0) = ZPoly(Rational(1));
  for (int m = 0; m < n; ++m) {
    for (int l = 0; l <= m + 1; ++l) {
      ZPoly x;
      if (l <= m) x += z_plus(2L * l) * a(m, l);
      if (l >= 1) x += z_plus(2L * l - 1) * a(m, l - 1);
      a(m + 1, l) = x;
    }
  }
  return a;
}

/// sum_k a[n][k](1) t^k (1-t)^(n-k) / (2^n n!), the B_n generating function.
inline ZPoly pgf_B(const TriangleC& a, int n) {
  const ZPoly t = ZPoly::linear(Rational(0), Rational(1));
  const ZPoly one_minus_t = ZPoly::linear(Rational(1), Rational(-1));
  ZPoly acc;
  for (int k = 0; k <= n; ++k) {
    ZPoly term(a(n, k)(Rational(1)));
    for (int e = 0; e < k; ++e) term *= t;
    for (int e = 0; e < n - k; ++e) term *= one_minus_t;
    acc += term;
  }
  return acc.scaled(Rational(Integer(1), signed_permutation_count(n)));
}

inline ZPoly pgf_B(int n) {
  if (n < 1) throw std::invalid_argument("pgf_B needs n >= 1");
  const TriangleC a = build_a(n);
  if (!(a == build_c(n))) throw std::logic_error("a-triangle differs from c-triangle");
  ZPoly b = pgf_B(a, n);
  if (!(b == pgf_A(n))) throw std::logic_error("pgf_B differs from pgf_A");
  return b;
}

// ---------------------------------------------------------------------------
// Bivariate generating function of the diagonal law
//
//   f(z, w) = (1-w) e^{(1-w)z/2} / (1 - w e^{(1-w)z})
//
// The denominator has constant term 1-w, which is not a unit in Q[w]. Since
// e^{(1-w)z} - 1 is divisible by (1-w) coefficient-wise, the factor cancels:
//   f = e^{(1-w)z/2} / (1 - w g),   g = (e^{(1-w)z} - 1) / (1-w),
// and 1 - w g has constant term 1, so geometric inversion applies.

using WSeries = TruncatedSeries<ZPoly>;

inline WSeries bivariate_series(std::size_t order) {
  const ZPoly one_minus_w = ZPoly::linear(Rational(1), Rational(-1));
  const ZPoly w = ZPoly::linear(Rational(0), Rational(1));
  const WSeries half = WSeries::variable(order, one_minus_w.scaled(make_rational(1L, 2L))).exp();
  const WSeries full = WSeries::variable(order, one_minus_w).exp();
  WSeries g(order);
  for (std::size_t i = 1; i <= order; ++i) g[i] = full[i].divide_exact(one_minus_w);
  const WSeries denominator = WSeries::constant(order, ZPoly(Rational(1))) - g.scaled(w);
  return half * denominator.geometric_inverse();
}

struct SeriesCheckReport {
  bool ok = true;
  std::size_t order = 0;
  std::optional<std::pair<int, int>> first_mismatch;  // (n, k)
  std::vector<ZPoly> coefficients;                    // z^n coefficient, as a polynomial in w
};

inline SeriesCheckReport bivariate_series_check(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  SeriesCheckReport report;
  report.order = order;
  const WSeries f = bivariate_series(order);
  const TriangleV v = build_V(static_cast<int>(order));
  for (std::size_t n = 0; n <= order; ++n) {
    report.coefficients.push_back(f[n]);
    const Rational scale(Integer(1), signed_permutation_count(n));
    for (std::size_t k = 0; k <= n + 1; ++k) {
      const Rational expected = k <= n ? Rational(v(static_cast<int>(n), static_cast<int>(k))) * scale : Rational(0);
      if (f[n].coefficient(k) != expected && report.ok) {
        report.ok = false;
        report.first_mismatch = {static_cast<int>(n), static_cast<int>(k)};
      }
    }
    if (f[n].degree() > static_cast<long>(n) && report.ok) {
      report.ok = false;
      report.first_mismatch = {static_cast<int>(n), static_cast<int>(f[n].degree())};
    }
  }
  return report;
}

struct PoleConstants {
  Rational r0, r1, r2;  // r(0), r'(0), r''(0) of r(s) = s / (e^s - 1)
};

/// Expands s / (e^s - 1) = 1 / (1 + s/2 + s^2/6 + ...) to second order.
inline PoleConstants pole_constants() {
  constexpr std::size_t order = 2;
  using QSeries = TruncatedSeries<Rational>;
  const QSeries e = QSeries::variable(order + 1, Rational(1)).exp();
  // (e^s - 1) / s, shifting coefficients down by one.
  QSeries shifted(order);
  for (std::size_t i = 0; i <= order; ++i) shifted[i] = e[i + 1];
  const QSeries r = shifted.geometric_inverse();
  return {r[0], r[1], r[2] * 2};
}

}  // namespace staircase
