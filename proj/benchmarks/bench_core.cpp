#include <benchmark/benchmark.h>

#include <random>

#include "hfp/abelian.hpp"
#include "hfp/lens.hpp"
#include "hfp/normal_form.hpp"
#include "hfp/obstruct.hpp"
#include "hfp/plumbing_double.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dist(-9, 9);
  hfp::IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hfp::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_CorrectionTable(benchmark::State& state) {
  const hfp::DoublePlumbing p(state.range(0), state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(hfp::correction_table(p));
  state.SetItemsProcessed(state.iterations() * p.torsion_order());
}
BENCHMARK(BM_CorrectionTable)->Arg(8)->Arg(20)->Arg(60);

void BM_LensTable(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const hfp::LensSpace lens(m * (m + 1) - 1, m + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(hfp::d_lens_table(lens, hfp::Orientation::Positive));
  state.SetItemsProcessed(state.iterations() * lens.p());
}
BENCHMARK(BM_LensTable)->Arg(3)->Arg(10)->Arg(30);

void BM_Subgroups(benchmark::State& state) {
  const auto g = hfp::FinAbelianGroup::from_invariant_factors(
      {state.range(0), state.range(0) * state.range(1)});
  for (auto _ : state) benchmark::DoNotOptimize(hfp::subgroups(g));
}
BENCHMARK(BM_Subgroups)->Args({2, 18})->Args({6, 6})->Args({12, 12});

void BM_ObstructDouble(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hfp::obstruct_double_b2minus0(8, 5));
}
BENCHMARK(BM_ObstructDouble);

void BM_FamilyDouble(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hfp::family_s2s2_double(15, 6));
}
BENCHMARK(BM_FamilyDouble);

}  // namespace

BENCHMARK_MAIN();
