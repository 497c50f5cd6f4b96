#include <algorithm>

#include <gtest/gtest.h>

#include "icelab/algebra/jet.hpp"
#include "icelab/algebra/linalg.hpp"
#include "icelab/algebra/permutation.hpp"
#include "icelab/algebra/poly.hpp"
#include "icelab/algebra/rational_function.hpp"
#include "icelab/algebra/series.hpp"
#include "icelab/random.hpp"

namespace icelab {
namespace {

using P = Poly<Rational>;

P var(std::size_t n, std::size_t i) { return P::variable(n, i); }
P cst(std::size_t n, const Rational& c) { return P::constant(n, c); }

TEST(Scalar, FieldAxiomsOnRandomRationals) {
  Lcg64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_signed_rational(rng), b = random_signed_rational(rng), c = random_signed_rational(rng);
    EXPECT_EQ(Rational(a + b), Rational(b + a));
    EXPECT_EQ(Rational(a * (b + c)), Rational(a * b + a * c));
    EXPECT_EQ(Rational(Rational(a / b) * b), a);
  }
}

TEST(Scalar, RationalsStayReduced) {
  Rational q(6, 4);
  q.canonicalize();
  EXPECT_EQ(render(q), "3/2");
  EXPECT_EQ(render(Rational(-2, 1)), "-2");
}

TEST(Scalar, FloatRenderingHas17Digits) {
  set_precision_bits(53);
  const std::string third = render(Real(1) / 3);
  EXPECT_EQ(third.size(), 19u);
  EXPECT_EQ(third.substr(0, 18), "0.3333333333333333");
  EXPECT_EQ(render(Real(1) / 4), "0.25");
}

TEST(Scalar, ToleranceScalesWithPrecision) {
  set_precision_bits(53);
  const Real t53 = scaled_tolerance(1e-8);
  set_precision_bits(113);
  const Real t113 = scaled_tolerance(1e-8);
  set_precision_bits(53);
  EXPECT_LT(t113, t53 * 1e-15);
}

TEST(PolyExactDiv, DifferenceOfSquares) {
  const P x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(poly_exact_div(x * x - y * y, x - y), x + y);
}

TEST(PolyExactDiv, TwoByTwoVandermonde) {
  const P z1 = var(2, 0), z2 = var(2, 1);
  Matrix<P> m(2, 2, cst(2, 0));
  m(0, 0) = cst(2, 1);
  m(0, 1) = cst(2, 1);
  m(1, 0) = z1;
  m(1, 1) = z2;
  EXPECT_EQ(poly_exact_div(det(m), z2 - z1), cst(2, 1));
}

TEST(PolyExactDiv, RemainderIsAnError) {
  const P x = var(2, 0), y = var(2, 1);
  try {
    poly_exact_div(x * x + y, x - y);
    FAIL() << "expected NonzeroRemainder";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonzeroRemainder);
  }
}

TEST(Det, Basics) {
  Matrix<Rational> one(1, 1, Rational(1));
  EXPECT_EQ(det(one), 1);
  const P z = var(1, 0);
  Matrix<P> m(2, 2, cst(1, 1));
  m(0, 1) = z;
  m(1, 0) = z;
  EXPECT_EQ(det(m), cst(1, 1) - z * z);
}

TEST(Det, ThreeByThreeVandermonde) {
  Matrix<P> m(3, 3, cst(3, 0));
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) m(j, k) = var(3, k).pow(static_cast<unsigned>(j));
  }
  P expected = cst(3, 1);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = j + 1; k < 3; ++k) expected *= var(3, k) - var(3, j);
  }
  EXPECT_EQ(det(m), expected);
}

TEST(Det, EqualRowsGiveExactZero) {
  Lcg64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 6));
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_signed_rational(rng);
    }
    const std::size_t a = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 1));
    const std::size_t b = (a + 1) % n;
    for (std::size_t j = 0; j < n; ++j) m(b, j) = m(a, j);
    EXPECT_EQ(det(m), 0);
  }
}

TEST(Series, GeometricInverse) {
  const std::vector<int> orders{3};
  auto f = Series<Rational>::constant(orders, Rational(1)) - Series<Rational>::variable(orders, 0);
  const auto g = f.inverse();
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(g.coefficient(std::vector<int>{k}), 1);
  EXPECT_EQ(Series<Rational>::constant(orders, Rational(2)).inverse(), Series<Rational>::constant(orders, Rational(1, 2)));
}

TEST(Series, InverseNeedsConstantTerm) {
  const std::vector<int> orders{2, 2};
  try {
    Series<Rational>::variable(orders, 1).inverse();
    FAIL() << "expected ZeroConstantTerm";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroConstantTerm);
  }
}

TEST(Series, BivariateMultiplyBack) {
  // 1 - 2 Delta t z + t^2 z w at (t, Delta) = (4/3, 0) and (2, 1/3).
  for (const auto& [t, delta] : {std::pair{Rational(4, 3), Rational(0)}, std::pair{Rational(2), Rational(1, 3)}}) {
    const P z = var(2, 0), w = var(2, 1);
    const P f = cst(2, 1) - cst(2, Rational(2 * delta * t)) * z + cst(2, Rational(t * t)) * z * w;
    const std::vector<int> orders{2, 2};
    const auto s = Series<Rational>::from_poly(f, orders);
    EXPECT_EQ(s * s.inverse(), Series<Rational>::constant(orders, Rational(1)));
  }
}

TEST(Series, TwoSidedInverseOnRandomUnits) {
  Lcg64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::vector<int> orders;
    for (std::size_t i = 0; i < n; ++i) orders.push_back(rng.uniform_int(0, 4));
    Series<Rational> f(orders);
    f.set(std::vector<int>(n, 0), random_signed_rational(rng));
    for (int k = 0; k < 6; ++k) {
      std::vector<int> e;
      for (std::size_t i = 0; i < n; ++i) e.push_back(rng.uniform_int(0, orders[i]));
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) continue;
      f.set(e, random_signed_rational(rng));
    }
    const auto g = f.inverse();
    const auto one = Series<Rational>::constant(orders, Rational(1));
    EXPECT_EQ(f * g, one);
    EXPECT_EQ(g * f, one);
  }
}

TEST(Jet, SinAtZeroMatchesClosedForm) {
  set_precision_bits(53);
  const auto j = taylor_jet<Real>([](const Jet<Real>& x) { return sin(x); }, Real(0), 9);
  for (int k = 0; k <= 4; ++k) {
    const Real expected = (k % 2 == 0 ? Real(1) : Real(-1)) / factorial<Real>(2 * k + 1);
    EXPECT_NEAR(static_cast<double>(j[static_cast<std::size_t>(2 * k + 1)]), static_cast<double>(expected), 1e-16);
    EXPECT_EQ(j[static_cast<std::size_t>(2 * k)], 0);
  }
}

TEST(Jet, OrderZeroIsEvaluation) {
  set_precision_bits(53);
  const Real eta(0.41), lambda(1.13);
  auto phi = [&](const Jet<Real>& l) { return Jet<Real>::constant(sin(Real(2 * eta)), l.order()) / (sin(l + eta) * sin(l - eta)); };
  const auto j = taylor_jet<Real>(phi, lambda, 0);
  const Real direct = sin(Real(2 * eta)) / (sin(Real(lambda + eta)) * sin(Real(lambda - eta)));
  EXPECT_LT(relative_error(j[0], direct), Real(1e-15));
}

TEST(Jet, FirstDerivativeMatchesFiniteDifference) {
  set_precision_bits(53);
  const Real eta(0.37), lambda(0.91);
  auto value = [&](const Real& l) { return sin(Real(2 * eta)) / (sin(Real(l + eta)) * sin(Real(l - eta))); };
  auto phi = [&](const Jet<Real>& l) { return Jet<Real>::constant(sin(Real(2 * eta)), l.order()) / (sin(l + eta) * sin(l - eta)); };
  const Real h(1e-6);
  const Real fd = (value(Real(lambda + h)) - value(Real(lambda - h))) / (2 * h);
  EXPECT_LT(relative_error(taylor_jet<Real>(phi, lambda, 1).derivative(1), fd), Real(1e-7));
}

TEST(Jet, PoleAtCenter) {
  try {
    taylor_jet<Rational>([](const Jet<Rational>& x) { return x.inverse(); }, Rational(0), 2);
    FAIL() << "expected PoleAtCenter";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAtCenter);
  }
}

TEST(Antisymmetrize, SmallCases) {
  const std::vector<P> z{var(3, 0), var(3, 1), var(3, 2)};
  const std::span<const P> two(z.data(), 2);
  EXPECT_EQ(antisymmetrize<P>([](std::span<const P> v) { return v[0]; }, two), z[0] - z[1]);
  EXPECT_TRUE(antisymmetrize<P>([](std::span<const P> v) { return cst(3, 1) + (v[0] - v[0]); }, two).is_zero());
}

TEST(Antisymmetrize, DirectSixTermSum) {
  const std::vector<P> z{var(3, 0), var(3, 1), var(3, 2)};
  auto f = [](std::span<const P> v) { return v[0] * v[0] * v[1]; };
  P expected(3);
  for_each_permutation(3, [&](const Permutation& sigma) {
    const P term = z[sigma[0]] * z[sigma[0]] * z[sigma[1]];
    if (sigma.sign() > 0) {
      expected += term;
    } else {
      expected -= term;
    }
  });
  const P got = antisymmetrize<P>(f, std::span<const P>(z));
  EXPECT_EQ(got, expected);
  // x^2 y antisymmetrized is the 3-variable Vandermonde up to sign.
  P vandermonde = cst(3, 1);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = j + 1; k < 3; ++k) vandermonde *= z[k] - z[j];
  }
  EXPECT_TRUE(got == vandermonde || got == -vandermonde);
}

TEST(Antisymmetrize, TranspositionFlipsSign) {
  Lcg64 rng(23);
  for (std::size_t s = 2; s <= 5; ++s) {
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < s; ++i) coeffs.push_back(random_signed_rational(rng));
    // Random non-symmetric f: sum_i c_i v_i^{i+1} + v_0 v_1.
    auto f = [&](std::span<const Rational> v) {
      Rational out = v[0] * v[1];
      for (std::size_t i = 0; i < v.size(); ++i) out += coeffs[i] * ipow(v[i], static_cast<int>(i) + 1);
      return out;
    };
    auto f_swapped = [&](std::span<const Rational> v) {
      std::vector<Rational> w(v.begin(), v.end());
      std::swap(w[0], w[1]);
      return f(std::span<const Rational>(w));
    };
    const auto vars = distinct_rationals(rng, s, true);
    const Rational direct = antisymmetrize<Rational>(f, std::span<const Rational>(vars));
    EXPECT_EQ(antisymmetrize<Rational>(f_swapped, std::span<const Rational>(vars)), Rational(-direct));
  }
}

TEST(Permutation, SignIsParity) {
  EXPECT_EQ(Permutation({1, 0, 2}).sign(), -1);
  EXPECT_EQ(Permutation({1, 2, 0}).sign(), 1);
  int total = 0;
  for_each_permutation(4, [&](const Permutation& p) { total += p.sign(); });
  EXPECT_EQ(total, 0);
}

TEST(RationalFunction, EvaluationRejectsVanishingDenominator) {
  const P x = var(1, 0);
  RationalFunction<Rational> f(x + cst(1, 1), x - cst(1, 2));
  const std::vector<Rational> ok{Rational(3)};
  EXPECT_EQ(f.evaluate(ok), 4);
  const std::vector<Rational> bad{Rational(2)};
  EXPECT_THROW(f.evaluate(bad), Error);
}

}  // namespace
}  // namespace icelab
