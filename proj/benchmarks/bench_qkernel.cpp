#include <benchmark/benchmark.h>

#include <qkernel/classifier.hpp>
#include <qkernel/fractal.hpp>
#include <qkernel/kernel.hpp>
#include <qkernel/oracle.hpp>
#include <qkernel/sigma.hpp>

using namespace qkernel;

static void BM_BuildKernel(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    InteractionKernel k = build_kernel(L);
    benchmark::DoNotOptimize(k.matrix.popcount());
  }
}
BENCHMARK(BM_BuildKernel)->Arg(8)->Arg(16)->Arg(32);

static void BM_BuildKernelDirect(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    InteractionKernel k = build_kernel_direct(L);
    benchmark::DoNotOptimize(k.matrix.popcount());
  }
}
BENCHMARK(BM_BuildKernelDirect)->Arg(8)->Arg(16)->Arg(32);

static void BM_Spectrum(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  InteractionKernel k = build_kernel(L);
  for (auto _ : state) {
    SpectrumReport s = spectrum(k);
    benchmark::DoNotOptimize(s.eigenvalues.data());
  }
}
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(8);

static void BM_Classify(benchmark::State& state) {
  const int L = 8;
  QKernel q = build_q_kernel(build_kernel(L));
  SolutionSet sols = oracle::enumerate(L);
  std::size_t i = 0;
  for (auto _ : state) {
    const PVector& p = sols.solutions[i++ % sols.solutions.size()];
    BoardConfig b = BoardConfig::from_positions(L, p);
    benchmark::DoNotOptimize(power_of_two_classify(q, b).is_full_solution);
  }
}
BENCHMARK(BM_Classify);

static void BM_SolveDyadic(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  SigmaSequence seq = sigma_sequences(build_kernel(L));
  for (auto _ : state) {
    SolutionSet s = solve(seq);
    benchmark::DoNotOptimize(s.solutions.size());
  }
}
BENCHMARK(BM_SolveDyadic)->Arg(6)->Arg(8);

static void BM_SolveOracle(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SolutionSet s = oracle::enumerate(L);
    benchmark::DoNotOptimize(s.solutions.size());
  }
}
BENCHMARK(BM_SolveOracle)->Arg(6)->Arg(8);

static void BM_FractalTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FractalTable t = build_table(kOpXor, n);
    benchmark::DoNotOptimize(t.table.data());
  }
}
BENCHMARK(BM_FractalTable)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
