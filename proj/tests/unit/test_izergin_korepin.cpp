#include <gtest/gtest.h>

#include "icelab/izergin_korepin.hpp"
#include "icelab/lattice.hpp"
#include "icelab/random.hpp"

namespace icelab {
namespace {

struct TrigDraw {
  std::vector<Real> lambda, nu;
  Real eta;
};

TrigDraw draw(Lcg64& rng, int n) {
  TrigDraw d;
  d.eta = rng.uniform_real(0.15, 0.65);
  for (int i = 0; i < n; ++i) {
    d.lambda.push_back(rng.uniform_real(0.6, 1.6));
    d.nu.push_back(rng.uniform_real(-0.4, 0.4));
  }
  return d;
}

class IzerginKorepin : public ::testing::Test {
 protected:
  void SetUp() override { set_precision_bits(53); }
};

TEST_F(IzerginKorepin, SingleSiteIsC) {
  const Real eta(0.3);
  const std::vector<Real> l{Real(1.1)}, n{Real(0.2)};
  EXPECT_LT(relative_error(ik_inhomogeneous(l, n, eta), Real(sin(Real(2 * eta)))), Real(1e-15));
  EXPECT_LT(relative_error(ik_homogeneous(Real(1.1), eta, 1), Real(sin(Real(2 * eta)))), Real(1e-15));
}

TEST_F(IzerginKorepin, InhomogeneousMatchesTransferMatrix) {
  Lcg64 rng(101);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto d = draw(rng, n);
      const Real z = partition_function(n, WeightSpec<Real>::inhomogeneous(d.lambda, d.nu, d.eta));
      EXPECT_LT(relative_error(ik_inhomogeneous(d.lambda, d.nu, d.eta), z), Real(1e-9)) << n;
    }
  }
}

TEST_F(IzerginKorepin, HomogeneousMatchesTransferMatrix) {
  Lcg64 rng(103);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Real eta = rng.uniform_real(0.15, 0.65), lambda = rng.uniform_real(0.6, 1.6);
      const VertexWeightFunctions f(eta);
      const auto spec = WeightSpec<Real>::homogeneous(f.a(lambda, Real(0)), f.b(lambda, Real(0)), f.c());
      EXPECT_LT(relative_error(ik_homogeneous(lambda, eta, n), partition_function(n, spec)), Real(1e-9)) << n;
    }
  }
}

TEST_F(IzerginKorepin, HigherPrecisionTightensAgreement) {
  PrecisionScope scope(200);
  const Real eta(0.37), lambda(0.93);
  const VertexWeightFunctions f(eta);
  const auto spec = WeightSpec<Real>::homogeneous(f.a(lambda, Real(0)), f.b(lambda, Real(0)), f.c());
  EXPECT_LT(relative_error(ik_homogeneous(lambda, eta, 5), partition_function(5, spec)), Real(1e-45));
}

TEST_F(IzerginKorepin, GammaAtZeroIsOne) {
  const VertexWeightFunctions f(Real(0.31));
  for (double l : {0.7, 1.0, 1.4}) EXPECT_LT(abs_value(Real(f.gamma(Real(0), Real(l)) - 1)), Real(1e-15));
}

TEST_F(IzerginKorepin, PhiTimesABIsC) {
  const VertexWeightFunctions f(Real(0.44));
  for (double l : {0.7, 1.0, 1.4}) {
    for (double n : {-0.2, 0.0, 0.3}) {
      const Real lhs = f.phi(Real(l), Real(n)) * f.a(Real(l), Real(n)) * f.b(Real(l), Real(n));
      EXPECT_LT(relative_error(lhs, f.c()), Real(1e-14));
    }
  }
}

TEST_F(IzerginKorepin, PhiJetDerivativesMatchFiniteDifferences) {
  const VertexWeightFunctions f(Real(0.44));
  const Real l(1.05), h(1e-5);
  const auto jet = f.phi_jet(l, 2);
  const Real p0 = f.phi(l, Real(0)), pp = f.phi(Real(l + h), Real(0)), pm = f.phi(Real(l - h), Real(0));
  EXPECT_LT(relative_error(jet[0], p0), Real(1e-14));
  EXPECT_LT(relative_error(jet.derivative(1), Real((pp - pm) / (2 * h))), Real(1e-8));
  EXPECT_LT(relative_error(jet.derivative(2), Real((pp - 2 * p0 + pm) / (h * h))), Real(1e-4));
}

TEST_F(IzerginKorepin, PhiPoleIsReported) {
  const Real eta(0.3);
  const VertexWeightFunctions f(eta);
  try {
    f.phi(eta, Real(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleInPhi);
  }
}

TEST_F(IzerginKorepin, CoincidingParametersAreRejected) {
  const Real eta(0.3);
  const std::vector<Real> l{Real(1.0), Real(1.0)}, n{Real(0.1), Real(0.2)};
  try {
    ik_inhomogeneous(l, n, eta);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoincidingParameters);
  }
}

TEST_F(IzerginKorepin, PartialInhomogeneousRelation) {
  Lcg64 rng(107);
  for (int n = 1; n <= 5; ++n) {
    const auto d = draw(rng, n);
    const Real lambda0 = rng.uniform_real(0.6, 1.6);
    const auto report = partial_inhomogeneous_relation(d.lambda, lambda0, d.eta);
    EXPECT_TRUE(report.passed()) << n << " " << report.discrepancy << " " << report.error.value_or("");
  }
}

}  // namespace
}  // namespace icelab
