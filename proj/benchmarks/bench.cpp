#include <benchmark/benchmark.h>

#include "cohomog/invariant_ring.hpp"
#include "cohomog/mv.hpp"
#include "cohomog/specfile.hpp"

using namespace cohomog;

#ifndef SPECS_DIR
#define SPECS_DIR "specs"
#endif

namespace {

MatrixGroup s3_rank2() {
  QMatrix swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  QMatrix second{{Rational(1), Rational(0)}, {Rational(-1), Rational(-1)}};
  return close_group({swap, second});
}

void BM_GroupClosure(benchmark::State& state) {
  auto gens = weyl_standard(WeylType::B, static_cast<int>(state.range(0)))
                  .generators();
  for (auto _ : state) benchmark::DoNotOptimize(close_group(gens));
}
BENCHMARK(BM_GroupClosure)->Arg(2)->Arg(3)->Arg(4);

void BM_Molien(benchmark::State& state) {
  MatrixGroup g = s3_rank2();
  for (auto _ : state)
    benchmark::DoNotOptimize(molien(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Molien)->Arg(20)->Arg(40)->Arg(60);

void BM_InvariantBasis(benchmark::State& state) {
  MatrixGroup g = weyl_standard(WeylType::C, 3);
  for (auto _ : state) {
    InvariantRing ring(g);  // fresh cache each iteration
    benchmark::DoNotOptimize(ring.basis(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_InvariantBasis)->Arg(8)->Arg(16)->Arg(24);

void BM_MVDegree(benchmark::State& state) {
  ActionSpec spec = parse_spec_file(std::string(SPECS_DIR) + "/su3_s7.spec");
  for (auto _ : state) {
    MVComputer mv(spec);
    int total = 0;
    for (int d = 0; d <= state.range(0); ++d)
      total += d % 2 == 0 ? mv.even_dim(d) : mv.odd_dim(d);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MVDegree)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
