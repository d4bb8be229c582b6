#include <gtest/gtest.h>

#include "staircase/polynomial.hpp"

using namespace staircase;
using P = RationalPolynomial;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST(Polynomial, TrimAndDegree) {
  EXPECT_EQ(P().degree(), -1);
  EXPECT_TRUE(P({q(0), q(0)}).is_zero());
  EXPECT_EQ(P({q(1), q(2), q(0)}).degree(), 1);
  EXPECT_EQ(P::monomial(q(3), 4).coefficient(4), q(3));
  EXPECT_EQ(P::monomial(q(3), 4).coefficient(9), q(0));
}

TEST(Polynomial, Arithmetic) {
  const P a = P::linear(q(1), q(1));   // 1 + x
  const P b = P::linear(q(-1), q(1));  // -1 + x
  EXPECT_EQ(a * b, P({q(-1), q(0), q(1)}));
  EXPECT_EQ(a + b, P({q(0), q(2)}));
  EXPECT_EQ(a - a, P());
  EXPECT_EQ(-a, P({q(-1), q(-1)}));
  EXPECT_EQ(a.scaled(q(1, 2)), P({q(1, 2), q(1, 2)}));
  EXPECT_EQ(product_of_linear<Rational>({q(1), q(2), q(3)}), P({q(6), q(11), q(6), q(1)}));
}

TEST(Polynomial, DivMod) {
  const P num({q(-1), q(0), q(0), q(1)});  // x^3 - 1
  const auto [quo, rem] = num.divmod(P::linear(q(-1), q(1)));
  EXPECT_EQ(quo, P({q(1), q(1), q(1)}));
  EXPECT_TRUE(rem.is_zero());
  const auto [q2, r2] = P({q(1), q(0), q(1)}).divmod(P::linear(q(0), q(2)));
  EXPECT_EQ(q2, P({q(0), q(1, 2)}));
  EXPECT_EQ(r2, P(q(1)));
  EXPECT_THROW(num.divmod(P()), std::domain_error);
  EXPECT_THROW(P({q(1), q(0), q(1)}).divide_exact(P::linear(q(-1), q(1))), std::domain_error);
}

TEST(Polynomial, DerivativeAndEvaluate) {
  const P p({q(1), q(-3), q(0), q(2)});
  EXPECT_EQ(p.derivative(), P({q(-3), q(0), q(6)}));
  EXPECT_EQ(p(q(2)), q(11));
  EXPECT_EQ(p(q(1, 2)), q(-1, 4));
  EXPECT_EQ(P().derivative(), P());
}

TEST(Polynomial, Str) {
  EXPECT_EQ(P().str(), "0");
  EXPECT_EQ(P({q(1), q(0), q(-2)}).str("z"), "(1) + (-2)*z^2");
}

TEST(TruncatedSeries, ExpOfVariable) {
  using S = TruncatedSeries<Rational>;
  const S e = S::variable(6, q(1)).exp();
  Rational fact = 1;
  for (std::size_t i = 0; i <= 6; ++i) {
    if (i > 0) fact *= static_cast<long>(i);
    EXPECT_EQ(e[i], 1 / fact) << i;
  }
  EXPECT_THROW(S::constant(3, q(1)).exp(), std::domain_error);
}

TEST(TruncatedSeries, GeometricInverse) {
  using S = TruncatedSeries<Rational>;
  const S one_minus_z(5, {q(1), q(-1)});
  const S inv = one_minus_z.geometric_inverse();
  for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(inv[i], q(1));
  EXPECT_EQ(one_minus_z * inv, S::constant(5, q(1)));
  EXPECT_THROW(S(5, {q(2)}).geometric_inverse(), std::domain_error);
}

TEST(TruncatedSeries, ProductsAreTruncated) {
  using S = TruncatedSeries<Rational>;
  const S a(2, {q(1), q(1), q(1)});
  EXPECT_EQ(a * a, S(2, {q(1), q(2), q(3)}));
  EXPECT_THROW(a * S(3), std::invalid_argument);
}
