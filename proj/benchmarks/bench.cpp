#include <benchmark/benchmark.h>

#include "hecke/decomp.hpp"
#include "hecke/standard.hpp"
#include "hecke/sweeps.hpp"
#include "hecke/zoo.hpp"

using namespace hecke;

namespace {

Field f5() { return Field(5, 1, {0, 1}); }

Character case9_witness(const Field& f) {
  PConfig cfg(f, 1);
  return Character(cfg, VUnit(1, f.from_int(2)), VUnit(0, f.from_int(2)),
                   VUnit(-1, f.from_int(2)));
}

}  // namespace

static void BM_FieldMul(benchmark::State& state) {
  Field f = f5();
  auto a = f.from_int(2), b = f.from_int(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a = a * b);
  }
}
BENCHMARK(BM_FieldMul);

static void BM_MatrixMul6(benchmark::State& state) {
  Field f = f5();
  Rep rep = make_module(
      SimpleLabel(Kind::K6, {f.from_int(2), f.from_int(3), f.from_int(4)}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rep.t() * rep.s1());
  }
}
BENCHMARK(BM_MatrixMul6);

static void BM_Classify(benchmark::State& state) {
  Field f = f5();
  Character chi = case9_witness(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(chi));
  }
}
BENCHMARK(BM_Classify);

static void BM_BuildReducedStandard(benchmark::State& state) {
  Field f = f5();
  Character chi = case9_witness(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_reduced_standard(chi));
  }
}
BENCHMARK(BM_BuildReducedStandard);

static void BM_ProperSubmodulesDim6(benchmark::State& state) {
  Field f = f5();
  Rep rep = build_reduced_standard(case9_witness(f));
  for (auto _ : state) {
    benchmark::DoNotOptimize(proper_submodules(rep));
  }
}
BENCHMARK(BM_ProperSubmodulesDim6);

static void BM_CompositionSeriesLength4(benchmark::State& state) {
  Field f = f5();
  Rep rep = build_reduced_standard(case9_witness(f));
  for (auto _ : state) {
    benchmark::DoNotOptimize(composition_series(rep));
  }
}
BENCHMARK(BM_CompositionSeriesLength4);

static void BM_IsoSearchDim6(benchmark::State& state) {
  Field f = f5();
  Rep a = make_module(
      SimpleLabel(Kind::K6, {f.from_int(2), f.from_int(3), f.from_int(4)}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iso(a, a));
  }
}
BENCHMARK(BM_IsoSearchDim6);

BENCHMARK_MAIN();
