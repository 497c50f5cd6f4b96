#include <numeric>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "icelab/correlations.hpp"
#include "icelab/lattice.hpp"
#include "icelab/random.hpp"

namespace icelab {
namespace {

using R = Rational;
using P = Poly<R>;

WeightSpec<R> w345() { return WeightSpec<R>::homogeneous(3, 4, 5); }

std::vector<WeightSpec<R>> weight_draws(std::uint64_t seed, int count) {
  Lcg64 rng(seed);
  std::vector<WeightSpec<R>> out{w345()};
  while (static_cast<int>(out.size()) < count) {
    const R a = random_rational(rng), b = random_rational(rng);
    if (a == b) continue;
    out.push_back(WeightSpec<R>::homogeneous(a, b, random_rational(rng)));
  }
  return out;
}

TEST(GeneratingFunction, FrozenCoefficients) {
  const auto h3 = h_poly(3, w345());
  EXPECT_EQ(h3.coefficients, (std::vector<R>{R(81, 625), R(288, 625), R(256, 625)}));
  EXPECT_EQ(h_poly(2, w345()).coefficients, (std::vector<R>{R(9, 25), R(16, 25)}));
  EXPECT_EQ(h_poly(1, w345()).coefficients, (std::vector<R>{R(1)}));
  EXPECT_EQ(h3.evaluate(R(1, 2)), R(81 + 144 + 64, 625));
}

TEST(GeneratingFunction, AtOneIsOne) {
  for (const auto& w : weight_draws(5, 10)) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(h_poly(n, w).evaluate(R(1)), 1);
  }
}

TEST(Hns, FrozenValues) {
  const auto w = w345();
  const std::vector<R> pt{R(1, 2), R(2, 3), R(-3, 5)};
  const auto h22 = h_ns(2, 2, w);
  EXPECT_EQ(h22, P::constant(2, R(9, 25)) + P::constant(2, R(16, 25)) * P::variable(2, 0) * P::variable(2, 1));
  EXPECT_EQ(h22.evaluate(std::span<const R>(pt.data(), 2)), R(43, 75));
  EXPECT_EQ(h_ns(3, 2, w).evaluate(std::span<const R>(pt.data(), 2)), R(43129, 140625));
  EXPECT_EQ(h_ns(3, 3, w).evaluate(std::span<const R>(pt)), R(3913, 390625));
}

TEST(Hns, ZeroAndOneVariable) {
  for (const auto& w : weight_draws(7, 4)) {
    for (int n = 1; n <= 5; ++n) {
      EXPECT_EQ(h_ns(n, 0, w), P::constant(0, R(1)));
      const auto h = h_poly(n, w);
      EXPECT_EQ(h_ns(n, 1, w), P::univariate(1, 0, std::span<const R>(h.coefficients)));
    }
  }
}

TEST(Hns, ReductionSymmetryDegree) {
  for (const auto& w : weight_draws(11, 3)) {
    for (int n = 1; n <= 6; ++n) {
      P previous = h_ns(n, 0, w);
      for (int s = 1; s <= n; ++s) {
        const P h = h_ns(n, s, w);
        const auto last = static_cast<std::size_t>(s - 1);
        EXPECT_EQ(h.substitute(last, R(1)), embed(previous, static_cast<std::size_t>(s))) << n << " " << s;
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(s); ++i) EXPECT_EQ(h.swap_variables(i, i + 1), h);
        for (std::size_t i = 0; i < static_cast<std::size_t>(s); ++i) EXPECT_LE(h.degree_in(i), n - 1);
        previous = h;
      }
    }
  }
}

TEST(Hns, FromPrecomputedRowsMatches) {
  const auto w = w345();
  std::vector<GeneratingFunction<R>> gens;
  for (int m = 2; m <= 4; ++m) gens.push_back(h_poly(m, w));
  EXPECT_EQ(h_ns_from(std::span<const GeneratingFunction<R>>(gens), 3), h_ns(4, 3, w));
}

TEST(Hns, FloatAgreesWithExact) {
  set_precision_bits(53);
  const auto we = w345();
  const auto wf = WeightSpec<Real>::homogeneous(Real(3), Real(4), Real(5));
  const std::vector<R> pe{R(1, 3), R(3, 4), R(2, 5), R(1, 7), R(5, 6), R(1, 2)};
  std::vector<Real> pf;
  for (const auto& q : pe) pf.push_back(from_rational<Real>(q));
  for (int s = 1; s <= 6; ++s) {
    const auto k = static_cast<std::size_t>(s);
    const Real exact = from_rational<Real>(h_ns(6, s, we).evaluate(std::span<const R>(pe.data(), k)));
    const Real approx = h_ns(6, s, wf).evaluate(std::span<const Real>(pf.data(), k));
    EXPECT_LT(relative_error(approx, exact), Real(1e-10)) << s;
  }
}

TEST(UOfZ, Values) {
  const auto w = w345();
  EXPECT_EQ(w.t(), R(4, 3));
  EXPECT_EQ(w.delta(), 0);
  EXPECT_EQ(u_of_z(R(1), w.t(), w.delta()), 0);
  EXPECT_EQ(u_of_z(R(0), w.t(), w.delta()), 1);
  EXPECT_EQ(u_of_z(R(1, 2), w.t(), w.delta()), R(9, 34));
}

TEST(UOfZ, SeriesComposition) {
  const R t(2), delta(1, 3);
  const R k = t * t - 2 * delta * t;
  const auto s = compose_with_u(P::variable(1, 0), {3}, t, delta);
  EXPECT_EQ(s.coefficient(std::vector<int>{0}), 1);
  EXPECT_EQ(s.coefficient(std::vector<int>{1}), R(-(1 + k)));
  EXPECT_EQ(s.coefficient(std::vector<int>{2}), R(k * (1 + k)));
  EXPECT_EQ(s.coefficient(std::vector<int>{3}), R(-k * k * (1 + k)));
}

TEST(IteratedResidue, SingleVariable) {
  Integrand<R> f(1);
  f.pole(0, 2).unit(P::constant(1, R(1)) + P::variable(1, 0), 3);
  const ResidueSpec<R> at0{R(0), -1};
  EXPECT_EQ(iterated_residue(f, std::span<const ResidueSpec<R>>(&at0, 1)), 3);

  Integrand<R> g(1);
  g.pole(0, 2).unit(P::variable(1, 0), 3);
  const ResidueSpec<R> at2{R(2), -1};
  EXPECT_EQ(iterated_residue(g, std::span<const ResidueSpec<R>>(&at2, 1)), 12);
}

TEST(IteratedResidue, InverseFactorAndScale) {
  // Res_{v=0} v^{-3} / (1 - 2v) = 4, scaled by 5.
  Integrand<R> f(1);
  f.scale(R(5)).pole(0, 3).unit(P::constant(1, R(1)) - P::constant(1, R(2)) * P::variable(1, 0), -1);
  const ResidueSpec<R> at0{R(0), -1};
  EXPECT_EQ(iterated_residue(f, std::span<const ResidueSpec<R>>(&at0, 1)), 20);
}

TEST(IteratedResidue, TwoVariablesAnyOrder) {
  const P one = P::constant(2, R(1)), x = P::variable(2, 0), y = P::variable(2, 1);
  Integrand<R> f(2);
  f.pole(0, 2).pole(1, 1).unit(one + x + y, 2).unit(one - x * y, -1);
  const std::vector<ResidueSpec<R>> specs{{R(0), -1}, {R(0), -1}};
  const R joint = iterated_residue(f, std::span<const ResidueSpec<R>>(specs));
  EXPECT_EQ(joint, 2);
  ResidueOptions reversed;
  reversed.processing_order = {1, 0};
  EXPECT_EQ(iterated_residue(f, std::span<const ResidueSpec<R>>(specs), reversed), joint);
  ResidueOptions more;
  more.extra_order = 3;
  EXPECT_EQ(iterated_residue(f, std::span<const ResidueSpec<R>>(specs), more), joint);
}

TEST(IteratedResidue, VanishingFactorIsReported) {
  Integrand<R> f(1);
  f.pole(0, 1).unit(P::variable(1, 0), -1);
  const ResidueSpec<R> at0{R(0), -1};
  try {
    iterated_residue(f, std::span<const ResidueSpec<R>>(&at0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroConstantTerm);
  }
}

TEST(Integrals, FrozenValues) {
  const auto w = w345();
  EXPECT_EQ(efp_integral_asym(3, 2, 1, w), R(369, 625));
  EXPECT_EQ(efp_integral_sym(4, 2, 2, w), R(6561, 390625));
  EXPECT_EQ(efp_w_form(4, 2, 2, w), R(6561, 390625));
  EXPECT_EQ(efp_double_integral(3, 2, 1, w), R(369, 625));
  const int p2[] = {2}, p13[] = {1, 3};
  EXPECT_EQ(ztop_integral(3, 1, p2, w), 60);
  EXPECT_EQ(zbot_integral(3, 1, p2, w), 15000);
  EXPECT_EQ(ztop_integral(3, 2, p13, w), 15000);
  EXPECT_EQ(zbot_integral(3, 2, p13, w), 60);
}

TEST(Integrals, MatchBruteForceEnumeration) {
  for (const auto& w : weight_draws(13, 3)) {
    const auto ow = oracle::homogeneous<R>(w.a(), w.b(), w.c());
    for (int n = 1; n <= 4; ++n) {
      const R z = oracle::partition<R>(n, ow);
      for (int s = 1; s <= n; ++s) {
        for (const auto& tuple : increasing_tuples(s, 1, n)) {
          EXPECT_EQ(ztop_integral(n, s, tuple, w), oracle::top_part<R>(n, s, tuple, ow));
          EXPECT_EQ(zbot_integral(n, s, tuple, w), oracle::bottom_part<R>(n, s, tuple, ow));
        }
        for (int r = s; r <= n; ++r) {
          R efp(0);
          for (const auto& tuple : increasing_tuples(s, 1, r)) {
            efp += oracle::top_part<R>(n, s, tuple, ow) * oracle::bottom_part<R>(n, s, tuple, ow);
          }
          efp /= z;
          EXPECT_EQ(efp_integral_asym(n, r, s, w), efp) << n << r << s;
          EXPECT_EQ(efp_integral_sym(n, r, s, w), efp);
          EXPECT_EQ(efp_w_form(n, r, s, w), efp);
        }
      }
    }
  }
}

TEST(Integrals, ZbotVanishesWithNonPositivePosition) {
  const auto w = w345();
  for (int s = 1; s <= 3; ++s) {
    std::vector<int> shifted(static_cast<std::size_t>(s));
    std::iota(shifted.begin(), shifted.end(), 0);
    EXPECT_EQ(zbot_integral(4, s, std::span<const int>(shifted), w), 0);
  }
}

TEST(Integrals, ProcessingOrderAndTruncationIndependence) {
  const auto w = weight_draws(17, 2).back();
  const R base = efp_integral_asym(4, 3, 3, w);
  std::vector<std::size_t> order{0, 1, 2};
  do {
    ResidueOptions opts;
    opts.processing_order = order;
    EXPECT_EQ(efp_integral_asym(4, 3, 3, w, opts), base);
  } while (std::next_permutation(order.begin(), order.end()));
  ResidueOptions more;
  more.extra_order = 2;
  EXPECT_EQ(efp_integral_sym(4, 3, 3, w, more), efp_integral_sym(4, 3, 3, w));
}

TEST(Integrals, FloatBackendAgrees) {
  set_precision_bits(53);
  const auto wf = WeightSpec<Real>::homogeneous(Real(3), Real(4), Real(5));
  EXPECT_LT(relative_error(efp_integral_sym(4, 2, 2, wf), Real(6561.0 / 390625.0)), Real(1e-10));
}

TEST(Lemmas, GeometricMultisumAndResidueLemma) {
  for (int s = 1; s <= 3; ++s) {
    for (int r = 1; r <= 4; ++r) EXPECT_TRUE(geometric_multisum_check(s, r, 10).passed()) << s << r;
  }
  Lcg64 rng(19);
  for (int s = 1; s <= 4; ++s) EXPECT_TRUE(residue_lemma_check(s, rng).passed()) << s;
}

TEST(Embed, ShiftsSlots) {
  EXPECT_EQ(embed(P::variable(1, 0), 3, 1), P::variable(3, 1));
  EXPECT_THROW(embed(P::variable(2, 0), 2, 1), Error);
}

}  // namespace
}  // namespace icelab
