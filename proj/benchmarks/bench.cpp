#include <benchmark/benchmark.h>

#include "enriques/enumeration.hpp"
#include "enriques/feasibility.hpp"
#include "enriques/reduction.hpp"
#include "enriques/walls.hpp"

namespace {

using namespace enriques;

const NumClass kD = NumClass::from({17, 13, 3, -2, 4, 1, 0, -3, 2, 1});

std::vector<NumClass> e8_basis() {
  std::vector<NumClass> b;
  for (int i = 1; i <= 8; ++i) {
    b.push_back(NumClass::root(i));
  }
  return b;
}

void BM_Phi(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(kD));
  }
}
BENCHMARK(BM_Phi);

void BM_E8ShortVectors(benchmark::State& state) {
  const ShortVectorQuery q{e8_basis(), Integer(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(short_vectors(q));
  }
}
BENCHMARK(BM_E8ShortVectors)->Arg(2)->Arg(4)->Arg(6);

void BM_ReduceRank4(benchmark::State& state) {
  const PicClass c1(Integer(state.range(0)) * kD);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_rank4(c1, Integer(1000)));
  }
}
BENCHMARK(BM_ReduceRank4)->Arg(1)->Arg(10)->Arg(100);

void BM_WallsThrough(benchmark::State& state) {
  const NumClass h = NumClass::u1() + NumClass::u2();
  const MukaiVector v(Integer(2), PicClass(h), Integer(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(walls_through(h, v));
  }
}
BENCHMARK(BM_WallsThrough)->Unit(benchmark::kMillisecond);

void BM_CbSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cb_sweep(Integer(200)));
  }
}
BENCHMARK(BM_CbSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
