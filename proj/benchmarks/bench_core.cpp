#include <genocchi/bernoulli.hpp>
#include <genocchi/egf_series.hpp>
#include <genocchi/genocchi_numbers.hpp>
#include <genocchi/ivp.hpp>

#include <benchmark/benchmark.h>

namespace {

void SeriesReciprocal(benchmark::State& state) {
  const auto f = genocchi::EGFSeries::geometric_sum(6, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.reciprocal());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SeriesReciprocal)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void GenocchiSeriesRoute(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(genocchi::genocchi_by_series(6, state.range(0)));
  }
}
BENCHMARK(GenocchiSeriesRoute)->Arg(20)->Arg(40)->Arg(80);

void GenocchiRecurrenceRoute(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(genocchi::genocchi_by_recurrence(6, state.range(0)));
  }
}
BENCHMARK(GenocchiRecurrenceRoute)->Arg(20)->Arg(40)->Arg(80);

void BernoulliDualRoute(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(genocchi::bernoulli_numbers(state.range(0)));
  }
}
BENCHMARK(BernoulliDualRoute)->Arg(16)->Arg(32)->Arg(64);

void TriangleRows(benchmark::State& state) {
  for (auto _ : state) {
    genocchi::BernoulliCache cache(state.range(0));
    benchmark::DoNotOptimize(genocchi::triangle(state.range(0), cache));
  }
}
BENCHMARK(TriangleRows)->Arg(8)->Arg(16)->Arg(24);

void NewtonExpansionOfInterpolant(benchmark::State& state) {
  genocchi::BernoulliCache cache(state.range(0));
  const auto p = genocchi::genocchi_interpolant(state.range(0), cache);
  for (auto _ : state) {
    benchmark::DoNotOptimize(genocchi::newton_expand(p));
  }
}
BENCHMARK(NewtonExpansionOfInterpolant)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
