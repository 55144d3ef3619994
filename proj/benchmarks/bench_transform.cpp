#include <benchmark/benchmark.h>

#include <random>

#include "vcbent/bentlab.hpp"
#include "vcbent/generator.hpp"
#include "vcbent/oracle.hpp"
#include "vcbent/vctransform.hpp"

using namespace vcbent;

namespace {

SignVector random_sign(int p, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> digit(0, p - 1);
  std::vector<std::uint8_t> v(checked_pow(p, n));
  for (auto& x : v) x = static_cast<std::uint8_t>(digit(rng));
  return sign_of(MvFunction(p, n, std::move(v)));
}

void BM_ForwardDense(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const SignVector f = random_sign(3, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(forward(f));
  state.SetComplexityN(static_cast<int64_t>(f.entries.size()));
}
BENCHMARK(BM_ForwardDense)->DenseRange(2, 6)->Complexity();

void BM_ForwardFast(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const SignVector f = random_sign(3, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(forward_fast(f));
  state.SetComplexityN(static_cast<int64_t>(f.entries.size()));
}
BENCHMARK(BM_ForwardFast)->DenseRange(2, 10, 2)->Complexity()->Unit(benchmark::kMicrosecond);

void BM_ForwardFastRadix(benchmark::State& state) {
  const auto p = static_cast<int>(state.range(0));
  const SignVector f = random_sign(p, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(forward_fast(f));
}
BENCHMARK(BM_ForwardFastRadix)->DenseRange(3, 6);

void BM_Inverse(benchmark::State& state) {
  const Spectrum s = forward_fast(random_sign(3, static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(s));
}
BENCHMARK(BM_Inverse)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_OracleAllBent(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_bent(3, 2, jobs));
}
BENCHMARK(BM_OracleAllBent)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GenerateAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_all(1));
}
BENCHMARK(BM_GenerateAll)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
