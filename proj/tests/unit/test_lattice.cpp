#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "icelab/lattice.hpp"
#include "icelab/random.hpp"

namespace icelab {
namespace {

using oracle::VertexType;

WeightSpec<Rational> w345() { return WeightSpec<Rational>::homogeneous(3, 4, 5); }

std::vector<WeightSpec<Rational>> random_weights(std::uint64_t seed, int count) {
  Lcg64 rng(seed);
  std::vector<WeightSpec<Rational>> out{w345()};
  while (static_cast<int>(out.size()) < count) {
    out.push_back(WeightSpec<Rational>::homogeneous(random_rational(rng), random_rational(rng), random_rational(rng)));
  }
  return out;
}

oracle::VertexWeight<Rational> as_oracle(const WeightSpec<Rational>& w) {
  return oracle::homogeneous<Rational>(w.a(), w.b(), w.c());
}

TEST(PartitionFunction, FrozenValuesAt345) {
  const auto w = w345();
  EXPECT_EQ(partition_function(1, w), 5);
  EXPECT_EQ(partition_function(2, w), 625);
  EXPECT_EQ(partition_function(3, w), 1953125);
  EXPECT_EQ(partition_function(4, w), Rational("152587890625"));
}

TEST(PartitionFunction, FrozenValueOffFreeFermion) {
  EXPECT_EQ(partition_function(3, WeightSpec<Rational>::homogeneous(2, 3, Rational(7, 2))), Rational(372155, 4));
}

TEST(PartitionFunction, SingleSiteIsC) {
  for (const auto& w : random_weights(3, 10)) EXPECT_EQ(partition_function(1, w), w.c());
}

TEST(PartitionFunction, MatchesBruteForce) {
  for (const auto& w : random_weights(7, 10)) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(partition_function(n, w), oracle::partition<Rational>(n, as_oracle(w))) << n;
  }
}

TEST(PartitionFunction, BottomUpFoldAgrees) {
  for (const auto& w : random_weights(9, 5)) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(partition_function_bottom_up(n, w), partition_function(n, w));
  }
}

TEST(PartitionFunction, InhomogeneousMatchesBruteForce) {
  set_precision_bits(53);
  Lcg64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3;
    std::vector<Real> lambda, nu;
    for (int i = 0; i < n; ++i) {
      lambda.push_back(rng.uniform_real(0.6, 1.6));
      nu.push_back(rng.uniform_real(-0.4, 0.4));
    }
    const Real eta = rng.uniform_real(0.15, 0.65);
    const auto spec = WeightSpec<Real>::inhomogeneous(lambda, nu, eta);
    const oracle::VertexWeight<Real> w = [&](VertexType t, int j, int k) {
      const Real& l = lambda[static_cast<std::size_t>(j - 1)];
      const Real& m = nu[static_cast<std::size_t>(k - 1)];
      if (t == VertexType::A) return Real(sin(Real(l - m + eta)));
      if (t == VertexType::B) return Real(sin(Real(l - m - eta)));
      return Real(sin(Real(2 * eta)));
    };
    EXPECT_LT(relative_error(partition_function(n, spec), oracle::partition<Real>(n, w)), Real(1e-12));
  }
}

TEST(RowTransfer, FrozenTwoByTwoRows) {
  const auto w = w345();
  const int at1[] = {1}, at2[] = {2};
  EXPECT_EQ(row_transfer_weight(RowState::all_down(2), RowState::from_positions(2, at1), w, 1), 15);
  EXPECT_EQ(row_transfer_weight(RowState::all_down(2), RowState::from_positions(2, at2), w, 1), 20);
  EXPECT_EQ(row_transfer_weight(RowState::all_down(2), RowState::all_down(2), w, 1), 0);
}

TEST(RowTransfer, EveryPairMatchesBruteForce) {
  for (const auto& w : random_weights(21, 3)) {
    for (int n = 1; n <= 4; ++n) {
      for (std::uint32_t top = 0; top < (1u << n); ++top) {
        for (std::uint32_t bottom = 0; bottom < (1u << n); ++bottom) {
          const RowState t(n, top), b(n, bottom);
          std::vector<bool> tv, bv;
          for (int r = 1; r <= n; ++r) {
            tv.push_back(t.is_up(r));
            bv.push_back(b.is_up(r));
          }
          EXPECT_EQ(row_transfer_weight(t, b, w, 1), oracle::enumerate<Rational>(n, 1, 1, tv, bv, as_oracle(w)));
        }
      }
    }
  }
}

TEST(Boundary, FrozenValues) {
  const auto w = w345();
  const int p2[] = {2}, p13[] = {1, 3};
  EXPECT_EQ(z_top_enum(3, 1, p2, w), 60);
  EXPECT_EQ(z_bot_enum(3, 1, p2, w), 15000);
  EXPECT_EQ(z_top_enum(3, 2, p13, w), 15000);
  EXPECT_EQ(z_bot_enum(3, 2, p13, w), 60);
  EXPECT_EQ(rcp_enum(3, 2, p13, w), Rational(288, 625));
  EXPECT_EQ(boundary_correlation(3, w, 1), Rational(81, 625));
  EXPECT_EQ(boundary_correlation(3, w, 2), Rational(288, 625));
  EXPECT_EQ(boundary_correlation(3, w, 3), Rational(256, 625));
  EXPECT_EQ(efp_enum(3, 2, 1, w), Rational(369, 625));
  EXPECT_EQ(efp_enum(4, 2, 2, w), Rational(6561, 390625));
  const auto sym = WeightSpec<Rational>::homogeneous(2, 2, 3);
  EXPECT_EQ(boundary_correlation(2, sym, 1), Rational(1, 2));
  EXPECT_EQ(boundary_correlation(2, sym, 2), Rational(1, 2));
}

TEST(Boundary, PartsMatchBruteForce) {
  for (const auto& w : random_weights(31, 3)) {
    for (int n = 1; n <= 4; ++n) {
      for (int s = 0; s <= n; ++s) {
        for (const auto& tuple : increasing_tuples(s, 1, n)) {
          EXPECT_EQ(z_top_enum(n, s, tuple, w), oracle::top_part<Rational>(n, s, tuple, as_oracle(w)));
          EXPECT_EQ(z_bot_enum(n, s, tuple, w), oracle::bottom_part<Rational>(n, s, tuple, as_oracle(w)));
        }
      }
    }
  }
}

TEST(Boundary, FactorizationSumsToZ) {
  for (const auto& w : random_weights(41, 4)) {
    for (int n = 1; n <= 5; ++n) {
      for (int s = 0; s <= n; ++s) {
        Rational total(0);
        for (const auto& tuple : increasing_tuples(s, 1, n)) total += z_top_enum(n, s, tuple, w) * z_bot_enum(n, s, tuple, w);
        EXPECT_EQ(total, partition_function(n, w)) << n << " " << s;
      }
    }
  }
}

TEST(Boundary, RcpCompletenessAndPositivity) {
  for (const auto& w : random_weights(51, 4)) {
    for (int n = 1; n <= 4; ++n) {
      for (int s = 1; s <= n; ++s) {
        Rational total(0);
        for (const auto& tuple : increasing_tuples(s, 1, n)) {
          const Rational p = rcp_enum(n, s, tuple, w);
          EXPECT_GE(p, 0);
          total += p;
        }
        EXPECT_EQ(total, 1);
      }
      Rational h(0);
      for (int r = 1; r <= n; ++r) {
        const Rational v = boundary_correlation(n, w, r);
        EXPECT_GT(v, 0);
        h += v;
      }
      EXPECT_EQ(h, 1);
    }
  }
}

TEST(Efp, FullRangeIsOneAndMonotone) {
  for (const auto& w : random_weights(61, 3)) {
    for (int n = 1; n <= 4; ++n) {
      for (int s = 1; s <= n; ++s) {
        EXPECT_EQ(efp_enum(n, n, s, w), 1);
        for (int r = 1; r < n; ++r) EXPECT_LE(efp_enum(n, r, s, w), efp_enum(n, r + 1, s, w));
        // Fewer than s positions available: impossible.
        for (int r = 1; r < s; ++r) EXPECT_EQ(efp_enum(n, r, s, w), 0);
      }
    }
  }
}

TEST(RowState, Positions) {
  const int p[] = {1, 3};
  const auto st = RowState::from_positions(4, p);
  EXPECT_EQ(st.mask(), 0b101u);
  EXPECT_EQ(st.positions(), (std::vector<int>{1, 3}));
  EXPECT_EQ(RowState::all_up(3).count_up(), 3);
  EXPECT_EQ(flux_sector_states(4, 2).size(), 6u);
  EXPECT_EQ(increasing_tuples(2, 1, 4).size(), 6u);
}

TEST(Errors, OutOfRangePositions) {
  const auto w = w345();
  const int bad[] = {4};
  try {
    z_top_enum(3, 1, bad, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PositionsOutOfRange);
  }
  EXPECT_THROW(boundary_correlation(3, w, 0), Error);
}

}  // namespace
}  // namespace icelab
