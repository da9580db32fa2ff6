// Short-vector enumeration kernels on the Leech lattice: the plain
// full-space search against the half-space search, serial and under OpenMP.

#include <benchmark/benchmark.h>

#include "orbifoldry/enumerate.hpp"
#include "orbifoldry/lattice.hpp"
#include "orbifoldry/report.hpp"

using namespace orbifoldry;

namespace {

const kernels::EnumerationPlan& plan_for(std::int64_t max_norm) {
  static const Lattice leech = load_lattice_file(default_data_dir() + "/leech.gram");
  static std::map<std::int64_t, kernels::EnumerationPlan> plans;
  auto it = plans.find(max_norm);
  if (it == plans.end()) it = plans.emplace(max_norm, kernels::make_plan(leech.gram(), max_norm)).first;
  return it->second;
}

constexpr std::uint64_t kBudget = 4'000'000'000ULL;

void report(benchmark::State& state, const kernels::EnumerationResult& result) {
  state.counters["nodes"] = static_cast<double>(result.nodes);
  state.counters["vectors"] = static_cast<double>(result.counts.back());
}

void BM_Reference(benchmark::State& state) {
  const auto& plan = plan_for(state.range(0));
  kernels::EnumerationResult result;
  for (auto _ : state) benchmark::DoNotOptimize(result = kernels::enumerate_reference(plan, kBudget));
  report(state, result);
}

void BM_FastSerial(benchmark::State& state) {
  const auto& plan = plan_for(state.range(0));
  kernels::EnumerationResult result;
  for (auto _ : state) benchmark::DoNotOptimize(result = kernels::enumerate_fast(plan, kBudget, false));
  report(state, result);
}

void BM_FastParallel(benchmark::State& state) {
  const auto& plan = plan_for(state.range(0));
  kernels::EnumerationResult result;
  for (auto _ : state) benchmark::DoNotOptimize(result = kernels::enumerate_fast(plan, kBudget, true));
  report(state, result);
}

}  // namespace

BENCHMARK(BM_Reference)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
