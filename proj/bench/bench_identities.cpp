#include <benchmark/benchmark.h>

#include "naryd/catalog.hpp"
#include "naryd/identities.hpp"

using namespace naryd;

namespace {

const NAryAlgebra& algebra(int which) {
  static const NAryAlgebra m8 = build_m8();
  static const NAryAlgebra d6 = build_family(FamilySpec::parse("Dr:n=5,r=6"));
  static const NAryAlgebra c2 = build_family(FamilySpec::parse("C2:n=5,beta=3/2"));
  switch (which) {
    case 0: return m8;
    case 1: return d6;
    default: return c2;
  }
}

void label(benchmark::State& state) {
  static const char* names[] = {"M8", "Dr:n=5,r=6", "C2:n=5,beta=3/2"};
  state.SetLabel(names[state.range(0)]);
}

void BM_FilippovParallel(benchmark::State& state) {
  const auto& a = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_filippov(a));
  label(state);
}

void BM_FilippovSerial(benchmark::State& state) {
  const auto& a = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::check_filippov(a));
  label(state);
}

void BM_MalcevParallel(benchmark::State& state) {
  const auto& a = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_nary_malcev(a));
  label(state);
}

void BM_MalcevSerial(benchmark::State& state) {
  const auto& a = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::check_nary_malcev(a));
  label(state);
}

}  // namespace

BENCHMARK(BM_FilippovParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FilippovSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MalcevParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MalcevSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
