// Parallel kernels against their serial reference loops, at MNIST shapes.
#include <benchmark/benchmark.h>

#include "rbm/kernels.hpp"
#include "rbm/rng.hpp"

namespace {

using namespace rbm;

constexpr Index kVisible = 784;
constexpr Index kHidden = 128;

SpinBatch spins(Index rows, Index cols, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  SpinBatch::Storage s(rows, cols);
  for (Index i = 0; i < s.size(); ++i) s.data()[i] = rng.uniform() < 0.2 ? 1 : -1;
  return SpinBatch(std::move(s));
}

Matrix weights(Index rows, Index cols, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  Matrix W(rows, cols);
  for (Index i = 0; i < W.size(); ++i) W.data()[i] = 0.1 * rng.normal();
  return W;
}

template <bool Reference>
void BM_CenteredProduct(benchmark::State& state) {
  const SpinBatch v = spins(state.range(0), kVisible, 1);
  const Matrix W = weights(kVisible, kHidden, 2);
  const Vector mu = Vector::Constant(kVisible, -0.6);
  for (auto _ : state) {
    if constexpr (Reference)
      benchmark::DoNotOptimize(kernels::reference::centered_product(v, mu, W));
    else
      benchmark::DoNotOptimize(kernels::centered_product(v, mu, W));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Reference>
void BM_AffineProduct(benchmark::State& state) {
  const SpinBatch h = spins(state.range(0), kHidden, 3);
  const Matrix W = weights(kVisible, kHidden, 4);
  const Vector b = Vector::Zero(kVisible);
  for (auto _ : state) {
    if constexpr (Reference)
      benchmark::DoNotOptimize(kernels::reference::affine_product(h, W, b));
    else
      benchmark::DoNotOptimize(kernels::affine_product(h, W, b));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Reference>
void BM_SampleSpins(benchmark::State& state) {
  const RowMatrix field = weights(state.range(0), kVisible, 5);
  std::uint64_t key = 0;
  for (auto _ : state) {
    if constexpr (Reference)
      benchmark::DoNotOptimize(kernels::reference::sample_spins(field, ++key));
    else
      benchmark::DoNotOptimize(kernels::sample_spins(field, ++key));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Reference>
void BM_PhaseMoments(benchmark::State& state) {
  const SpinBatch v = spins(state.range(0), kVisible, 6);
  const Matrix W = weights(kVisible, kHidden, 7);
  const Vector mu = Vector::Constant(kVisible, -0.6);
  for (auto _ : state) {
    if constexpr (Reference)
      benchmark::DoNotOptimize(kernels::reference::phase_moments(v, mu, W));
    else
      benchmark::DoNotOptimize(kernels::phase_moments(v, mu, W));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Reference>
void BM_MeanPairDistance(benchmark::State& state) {
  const SpinBatch x = spins(state.range(0), kVisible, 8);
  const SpinBatch y = spins(state.range(0), kVisible, 9);
  for (auto _ : state) {
    if constexpr (Reference)
      benchmark::DoNotOptimize(kernels::reference::mean_pair_distance(x, y));
    else
      benchmark::DoNotOptimize(kernels::mean_pair_distance(x, y));
  }
}

#define RBM_BENCH_PAIR(fn, lo, hi)                                                           \
  BENCHMARK_TEMPLATE(fn, false)->Name(#fn "/parallel")->RangeMultiplier(4)->Range(lo, hi); \
  BENCHMARK_TEMPLATE(fn, true)->Name(#fn "/reference")->RangeMultiplier(4)->Range(lo, hi)

RBM_BENCH_PAIR(BM_CenteredProduct, 64, 1024);
RBM_BENCH_PAIR(BM_AffineProduct, 64, 1024);
RBM_BENCH_PAIR(BM_SampleSpins, 64, 1024);
RBM_BENCH_PAIR(BM_PhaseMoments, 64, 1024);
RBM_BENCH_PAIR(BM_MeanPairDistance, 64, 256);

}  // namespace

BENCHMARK_MAIN();
