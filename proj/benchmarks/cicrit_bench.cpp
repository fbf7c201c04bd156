#include <benchmark/benchmark.h>

#include "cicrit/ci_classifier.hpp"
#include "cicrit/discriminant_search.hpp"
#include "cicrit/root_systems.hpp"
#include "cicrit/rr_integrality.hpp"

namespace {

void BM_DeltaMin(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cicrit::delta_min(p));
  }
}
BENCHMARK(BM_DeltaMin)->Arg(6)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_IntegralityTable(benchmark::State& state) {
  const cicrit::TwistIntegralityTable table(static_cast<unsigned>(state.range(0)));
  std::int64_t d = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.is_integral(static_cast<int>(d & 1), d));
    ++d;
  }
}
BENCHMARK(BM_IntegralityTable)->Arg(10)->Arg(30);

void BM_PositiveRootsE8(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cicrit::positive_roots(cicrit::DynkinType::E8, 8));
  }
}
BENCHMARK(BM_PositiveRootsE8);

void BM_ClassifyGrid(benchmark::State& state) {
  const cicrit::Classifier classifier(cicrit::VarietyDescriptor{cicrit::DynkinType::A, 11, 1});
  for (auto _ : state) {
    int decided = 0;
    for (std::int64_t d = 1; d <= 81; ++d) {
      for (std::int64_t n = 1; n <= 36; ++n) {
        decided += classifier.classify(d, n).verdict.kind != cicrit::VerdictKind::Unknown;
      }
    }
    benchmark::DoNotOptimize(decided);
  }
}
BENCHMARK(BM_ClassifyGrid)->Unit(benchmark::kMillisecond);

}  // namespace
