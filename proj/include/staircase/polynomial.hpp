#pragma once

// Dense univariate polynomials over an exact coefficient ring, and truncated
// power series whose coefficients may themselves be polynomials.

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace staircase {

template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// a + b x
  static Polynomial linear(T a, T b) { return Polynomial(std::vector<T>{std::move(a), std::move(b)}); }
  static Polynomial monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  template <typename X>
  X evaluate(const X& x) const {
    X acc = X(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }
  T operator()(const T& x) const { return evaluate<T>(x); }

  Polynomial derivative() const {
    if (coeffs_.size() < 2) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  /// Scales every coefficient by a scalar of a (possibly different) type.
  template <typename S>
  Polynomial scaled(const S& s) const {
    std::vector<T> c(coeffs_);
    for (auto& x : c) x = x * s;
    return Polynomial(std::move(c));
  }

  /// Long division over a field: returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem(coeffs_);
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {Polynomial(), *this};
    std::vector<T> quo(rem.size() - dd, T(0));
    const T& lead = divisor.coeffs_.back();
    for (std::size_t i = rem.size(); i-- > dd;) {
      const T q = rem[i] / lead;
      quo[i - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Quotient of a division that must leave no remainder.
  Polynomial divide_exact(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == T(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coeffs_[i] << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Product of (x + a_i) over the given constants.
template <typename T>
Polynomial<T> product_of_linear(const std::vector<T>& roots_shift) {
  Polynomial<T> p(T(1));
  for (const auto& a : roots_shift) p *= Polynomial<T>::linear(a, T(1));
  return p;
}

// ---------------------------------------------------------------------------

/// Power series in one variable truncated after degree `order`; every
/// product is truncated to the same order.
template <typename R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, R(0)) {}
  TruncatedSeries(std::size_t order, std::vector<R> coeffs) : coeffs_(order + 1, R(0)) {
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  static TruncatedSeries constant(std::size_t order, R c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  /// c * z, the monomial of degree one.
  static TruncatedSeries variable(std::size_t order, R c) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = std::move(c);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  R& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a.require_same_order(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a.require_same_order(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries c(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == R(0)) continue;
      for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return c;
  }
  template <typename S>
  TruncatedSeries scaled(const S& s) const {
    TruncatedSeries c(*this);
    for (auto& x : c.coeffs_) x = x * s;
    return c;
  }

  /// 1 / (1 - g) = sum of g^j, for a series 1 - g with unit constant term.
  TruncatedSeries geometric_inverse() const {
    if (!(coeffs_[0] == R(1))) throw std::domain_error("geometric inversion needs constant term 1");
    TruncatedSeries g = constant(order(), R(1)) - *this;
    TruncatedSeries acc = constant(order(), R(1));
    TruncatedSeries term = acc;
    for (std::size_t j = 1; j <= order(); ++j) {  // g has no constant term, so g^j = O(z^j)
      term = term * g;
      acc = acc + term;
    }
    return acc;
  }

  /// exp(h) for h with zero constant term, by composing with sum z^j / j!.
  TruncatedSeries exp() const {
    if (!(coeffs_[0] == R(0))) throw std::domain_error("series exponential needs zero constant term");
    TruncatedSeries acc = constant(order(), R(1));
    TruncatedSeries term = acc;
    for (std::size_t j = 1; j <= order(); ++j) {
      term = (term * *this).scaled(make_rational(1L, static_cast<long>(j)));
      acc = acc + term;
    }
    return acc;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void require_same_order(const TruncatedSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("series order mismatch");
  }
  std::vector<R> coeffs_;
};

}  // namespace staircase
