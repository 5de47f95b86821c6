// Serial reference vs OpenMP kernels on the resolvent and abscissa scans.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "nanobeam/kernels.hpp"
#include "nanobeam/modal_assembly.hpp"
#include "nanobeam/resolvent.hpp"

namespace {

using namespace nanobeam;

struct Fixture {
  std::vector<ModeBlock> blocks;
  std::vector<kernels::ScaledBlock<8>> scaled;
  std::vector<double> grid;

  explicit Fixture(int n_modes) {
    BeamParams p;
    blocks = assemble_blocks(p, n_modes);
    scaled = kernels::reference::scale_blocks<8>(blocks);
    grid = log_grid(0.1, 1e6, 50);
  }
};

void BM_ScanReference(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = kernels::reference::resolvent_scan<8>(f.scaled, f.grid);
    benchmark::DoNotOptimize(r);
  }
}

void BM_ScanParallel(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = kernels::parallel::resolvent_scan<8>(f.scaled, f.grid);
    benchmark::DoNotOptimize(r);
  }
}

void BM_AbscissaReference(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::abscissa_max<8>(f.blocks));
}

void BM_AbscissaParallel(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::abscissa_max<8>(f.blocks));
}

}  // namespace

BENCHMARK(BM_ScanReference)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AbscissaReference)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AbscissaParallel)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
