#include <algorithm>

#include <gtest/gtest.h>

#include "icelab/identities.hpp"
#include "icelab/random.hpp"

namespace icelab {
namespace {

using R = Rational;

template <class T>
std::span<const T> sp(const std::vector<T>& v) {
  return std::span<const T>(v);
}

std::string describe(const CheckReport& r) {
  return r.check_id + " lhs=" + r.lhs + " rhs=" + r.rhs + " err=" + r.discrepancy + " " + r.error.value_or("");
}

std::vector<R> proper_fractions(Lcg64& rng, std::size_t s) {
  std::vector<R> out;
  while (out.size() < s) {
    const R q = random_rational(rng);
    if (q < 1 && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

TEST(Psi, Value) { EXPECT_EQ(psi(R(1, 2), R(1, 3), R(2)), R(36, 35)); }

TEST(Ws, FrozenValues) {
  const std::vector<R> x1{R(3, 7)}, y1{R(5, 2)};
  EXPECT_EQ(ws_eval(sp(x1), sp(y1), R(-1, 3)), -14);
  const std::vector<R> x{R(1, 2), R(1, 3)}, y{R(1, 5), R(3, 4)};
  EXPECT_EQ(ws_eval(sp(x), sp(y), R(2)), R(964, 189));
  EXPECT_EQ(ws_degenerate(sp(x), R(2, 7), R(2)), R(7889, 2888));
  EXPECT_EQ(ws_confluent_limit(sp(x), R(2, 7), R(2)), R(7889, 2888));
}

TEST(Ws, SymmetricInEachSet) {
  const std::vector<R> x{R(1, 2), R(1, 3), R(2, 9)}, y{R(1, 5), R(3, 4), R(-4, 3)};
  const std::vector<R> xs{R(1, 3), R(2, 9), R(1, 2)}, ys{R(-4, 3), R(1, 5), R(3, 4)};
  const R tau(5, 7);
  const R w = ws_eval(sp(x), sp(y), tau);
  EXPECT_EQ(ws_eval(sp(xs), sp(y), tau), w);
  EXPECT_EQ(ws_eval(sp(x), sp(ys), tau), w);
}

TEST(Ws, DegenerateAgreesWithConfluentLimit) {
  Lcg64 rng(3);
  for (std::size_t s = 1; s <= 4; ++s) {
    const auto x = distinct_rationals(rng, s, true);
    const R y0 = random_signed_rational(rng), tau = random_signed_rational(rng);
    try {
      EXPECT_EQ(ws_degenerate(sp(x), y0, tau), ws_confluent_limit(sp(x), y0, tau));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PoleHit);
    }
  }
}

TEST(Ws, CoincidingArgumentsAreRejected) {
  const std::vector<R> x{R(1, 2), R(1, 2)}, y{R(1, 5), R(3, 4)};
  try {
    ws_eval(sp(x), sp(y), R(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoincidingParameters);
  }
}

TEST(Ws, PoleIsRejected) {
  const std::vector<R> x{R(1, 2)}, y{R(2)};
  try {
    ws_eval(sp(x), sp(y), R(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleHit);
  }
}

TEST(Cantini, BothSidesAgreeExactly) {
  Lcg64 rng(5);
  int checked = 0;
  for (std::size_t s = 1; s <= 4; ++s) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto x = distinct_rationals(rng, s), y = distinct_rationals(rng, s);
      const R tau = random_signed_rational(rng);
      const auto r = check_cantini<R>(sp(x), sp(y), tau);
      if (r.error) continue;
      EXPECT_TRUE(r.passed()) << describe(r);
      ++checked;
    }
  }
  EXPECT_GT(checked, 6);
}

TEST(Cantini, PolynomialForm) {
  for (const R& tau : {R(1), R(-3, 2), R(7, 5)}) {
    const auto r = check_cantini_polynomial(tau);
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

TEST(Identity1, HoldsExactly) {
  Lcg64 rng(7);
  const auto w = WeightSpec<R>::homogeneous(3, 4, 5);
  for (std::size_t s = 1; s <= 4; ++s) {
    const auto r = check_identity1<R>(sp(proper_fractions(rng, s)), w);
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

TEST(Whom, ThreeEvaluationsAgree) {
  Lcg64 rng(11);
  const auto w = WeightSpec<R>::homogeneous(R(2), R(5, 3), R(7, 4));
  for (std::size_t s = 1; s <= 3; ++s) {
    const auto r = check_whom<R>(sp(proper_fractions(rng, s)), w);
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

TEST(SmallId, Constant) {
  const R t(2, 3);
  EXPECT_EQ(smallid_constant(1, t), 1);
  EXPECT_EQ(smallid_constant(2, t), R(13, 9));
  EXPECT_EQ(smallid_constant(3, t), R(13 * 133, 9 * 81));
}

TEST(TracyWidom, ExactChecks) {
  Lcg64 rng(13);
  for (std::size_t s = 1; s <= 5; ++s) {
    const R p(2, 7);
    auto r = check_tracy_widom<R>(p, sp(proper_fractions(rng, s)));
    EXPECT_TRUE(r.passed()) << describe(r);
    r = check_dsvan<R>(R(3, 5), sp(distinct_rationals(rng, s, true)));
    EXPECT_TRUE(r.passed() || r.error) << describe(r);
    r = check_smallid<R>(R(5, 4), sp(distinct_rationals(rng, s, true)));
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

TEST(TracyWidom, CantiniReduction) {
  Lcg64 rng(17);
  for (std::size_t s = 1; s <= 3; ++s) {
    const R t(3, 2);
    const auto r = check_cantini_reduces_to_tw(R(1 / (1 + t * t)), sp(proper_fractions(rng, s)));
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

class Trigonometric : public ::testing::Test {
 protected:
  void SetUp() override { set_precision_bits(53); }
};

TEST_F(Trigonometric, KmstAndWsIk) {
  Lcg64 rng(19);
  for (std::size_t s = 1; s <= 4; ++s) {
    std::vector<Real> lambda, nu;
    for (std::size_t i = 0; i < s; ++i) {
      lambda.push_back(Real(0.6 + 0.25 * static_cast<double>(i) + rng.uniform_double(0, 0.1)));
      nu.push_back(Real(-0.4 + 0.2 * static_cast<double>(i) + rng.uniform_double(0, 0.05)));
    }
    const Real eta(0.33);
    auto r = check_kmst(sp(lambda), sp(nu), eta);
    EXPECT_TRUE(r.passed()) << describe(r);
    r = check_ws_ik(sp(lambda), sp(nu), eta, Real(0.11), Real(-0.23));
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

TEST_F(Trigonometric, FloatBackendIdentities) {
  Lcg64 rng(23);
  const auto w = WeightSpec<Real>::homogeneous(Real(3), Real(4), Real(5));
  for (std::size_t s = 1; s <= 3; ++s) {
    std::vector<Real> z;
    for (const auto& q : proper_fractions(rng, s)) z.push_back(from_rational<Real>(q));
    auto r = check_identity1<Real>(sp(z), w);
    EXPECT_TRUE(r.passed()) << describe(r);
    r = check_tracy_widom<Real>(Real(0.3), sp(z));
    EXPECT_TRUE(r.passed()) << describe(r);
  }
}

}  // namespace
}  // namespace icelab
