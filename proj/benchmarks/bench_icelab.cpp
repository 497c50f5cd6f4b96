#include <vector>

#include <benchmark/benchmark.h>

#include "icelab/correlations.hpp"
#include "icelab/identities.hpp"
#include "icelab/izergin_korepin.hpp"
#include "icelab/lattice.hpp"

namespace {

using icelab::Rational;
using icelab::Real;

const auto kFreeFermion = icelab::WeightSpec<Rational>::homogeneous(3, 4, 5);
const auto kGeneric = icelab::WeightSpec<Rational>::homogeneous(Rational(7, 3), Rational(2, 5), Rational(11, 4));

void BM_PartitionFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icelab::partition_function(n, kGeneric));
}
BENCHMARK(BM_PartitionFunction)->DenseRange(2, 8, 2);

void BM_IkHomogeneous(benchmark::State& state) {
  icelab::set_precision_bits(53);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icelab::ik_homogeneous(Real(1.1), Real(0.35), n));
}
BENCHMARK(BM_IkHomogeneous)->DenseRange(2, 8, 2);

void BM_Hns(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icelab::h_ns(6, s, kGeneric));
}
BENCHMARK(BM_Hns)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_EfpIntegralSym(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icelab::efp_integral_sym(5, 5, s, kGeneric));
}
BENCHMARK(BM_EfpIntegralSym)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_EfpEnum(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icelab::efp_enum(5, 5, s, kFreeFermion));
}
BENCHMARK(BM_EfpEnum)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_CantiniBothSides(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> x, y;
  for (std::size_t k = 0; k < s; ++k) {
    x.emplace_back(1, k + 2);
    y.emplace_back(2, 2 * k + 5);
  }
  const Rational tau(3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(icelab::cantini_lhs<Rational>(x, y, tau));
    benchmark::DoNotOptimize(icelab::cantini_rhs<Rational>(x, y, tau));
  }
}
BENCHMARK(BM_CantiniBothSides)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
