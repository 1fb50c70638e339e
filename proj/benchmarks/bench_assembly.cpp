#include <benchmark/benchmark.h>

#include "bergop/toeplitz.hpp"

using namespace bergop;

namespace {

const DiskQuadrature& quad() {
  static const DiskQuadrature q = build_disk_quadrature(96, 128);
  return q;
}

const MeasureSpec& symbol() {
  static const MeasureSpec a = MeasureSpec::from_density(
      [](cplx z) { return cplx(z.real()); }, 1.0, "Re z");
  return a;
}

void bm_assemble_parallel(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_toeplitz({symbol(), 2, n, quad()}));
  }
}

void bm_assemble_serial(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_toeplitz_serial({symbol(), 2, n, quad()}));
  }
}

BENCHMARK(bm_assemble_parallel)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_assemble_serial)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
