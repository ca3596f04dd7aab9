#include <benchmark/benchmark.h>

#include "unicyclo/analysis.hpp"
#include "unicyclo/cyclotomic.hpp"
#include "unicyclo/witness.hpp"

namespace uc = unicyclo::cyclo;

namespace {

// Auto (64-bit first) against big-integer-only expansion of Phi*_n.
void BM_ExpandUnitary(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto mode = state.range(1) ? uc::ExpandMode::BigOnly : uc::ExpandMode::Auto;
  for (auto _ : state) benchmark::DoNotOptimize(uc::unitary_cyclotomic_binomial(n, mode));
}
BENCHMARK(BM_ExpandUnitary)->ArgsProduct({{1320, 4620, 9240}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_KernelProduct(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uc::unitary_cyclotomic_kernel(n));
}
BENCHMARK(BM_KernelProduct)->Arg(1320)->Arg(4620)->Unit(benchmark::kMicrosecond);

void BM_InclusionExclusion(benchmark::State& state) {
  const uc::CoprimeBasis basis({8, 3, 5, 7, 11});
  for (auto _ : state) benchmark::DoNotOptimize(uc::inclusion_exclusion(basis));
}
BENCHMARK(BM_InclusionExclusion)->Unit(benchmark::kMicrosecond);

void BM_Multiply(benchmark::State& state) {
  const auto f = uc::unitary_cyclotomic(static_cast<std::uint64_t>(state.range(0)));
  const auto g = uc::inverse_unitary_cyclotomic(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_Multiply)->Arg(1000)->Arg(5000)->Unit(benchmark::kMicrosecond);

void BM_TableSearch(benchmark::State& state) {
  const unicyclo::analysis::SearchOptions opts{uc::PolyFamily::PhiStar, 2, 19, static_cast<std::uint64_t>(state.range(0)),
                                               static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(unicyclo::analysis::search_minimal_n(opts));
}
BENCHMARK(BM_TableSearch)->Args({5000, 1})->Args({5000, 4})->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unicyclo::witness::evaluate_witness(m, 5));
}
BENCHMARK(BM_Witness)->Arg(2)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
