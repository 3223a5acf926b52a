#include <benchmark/benchmark.h>

#include "cablecone/local_equiv.hpp"
#include "cablecone/pipeline.hpp"
#include "cablecone/reduction.hpp"

namespace {

using namespace cablecone;

// Args: q, n.
void BM_BuildCone(benchmark::State& state) {
  const KnotComplex k = staircase_t2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_cone_plus_one(k, state.range(1)));
}
BENCHMARK(BM_BuildCone)->Args({3, 2})->Args({11, 2})->Args({11, 4})->Args({21, 4});

void BM_Reduce(benchmark::State& state) {
  const FilteredComplex f = build_cone_plus_one(staircase_t2(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(f));
  state.counters["cone"] = static_cast<double>(f.size());
}
BENCHMARK(BM_Reduce)->Args({3, 2})->Args({11, 2})->Args({11, 4})->Args({21, 4})->Unit(benchmark::kMicrosecond);

void BM_StandardizeX(benchmark::State& state) {
  const KnotComplex k =
      to_uv_presentation(reduce(build_cone_plus_one(staircase_t2(state.range(0)), state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(standardize_x(k));
  state.counters["reduced"] = static_cast<double>(k.size());
}
BENCHMARK(BM_StandardizeX)->Args({3, 2})->Args({3, 5})->Args({11, 2})->Args({11, 4})->Unit(benchmark::kMicrosecond);

void BM_DInvariant(benchmark::State& state) {
  const FilteredComplex f = build_cone(staircase_t2(state.range(0)), 1, SurgerySpec::one_over(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(d_invariant(f));
}
BENCHMARK(BM_DInvariant)->Args({3, 1})->Args({11, 1})->Args({11, 3})->Unit(benchmark::kMicrosecond);

void BM_Pipeline(benchmark::State& state) {
  const Int q = state.range(0);
  const PipelineInput in{"torus:2," + std::to_string(q), staircase_t2(q), state.range(1), SurgerySpec::plus_one(),
                         std::nullopt, false};
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(in));
}
BENCHMARK(BM_Pipeline)->Args({3, 2})->Args({7, 3})->Args({11, 2})->Unit(benchmark::kMillisecond);

void BM_LocalEquivX(benchmark::State& state) {
  const KnotComplex k = to_uv_presentation(reduce(build_cone_plus_one(staircase_t2(3), 2)));
  const XComplex a = embed_in_x(k);
  const XComplex b = realize(standardize_x(k));
  LocalEquivLimits limits;
  limits.exponent_bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_local_equiv(a, b, limits, LocalRing::X));
}
BENCHMARK(BM_LocalEquivX)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
