// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qgr/coefficient_quiver.hpp"
#include "qgr/grassmannian.hpp"
#include "qgr/singular_examples.hpp"

using namespace qgr;

namespace {

// Gr_(n, n+1) of the n-th regular Kronecker string over F_q.
FiniteRep regular_string(std::size_t n, std::uint64_t q) {
  return realize(kronecker_regular_string(n), GaloisField(q));
}

DimVector middle_type(std::size_t n) {
  const auto k = static_cast<std::int64_t>(n);
  return DimVector{k / 2, k / 2 + (k % 2)};
}

void BM_CountParallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto x = regular_string(n, static_cast<std::uint64_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(count_points(x, middle_type(n)));
}

void BM_CountSerial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto x = regular_string(n, static_cast<std::uint64_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::count_points(x, middle_type(n)));
}

void BM_EnumerateParallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto x = std::make_shared<const FiniteRep>(regular_string(n, static_cast<std::uint64_t>(st.range(1))));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_subreps(x, middle_type(n)));
}

void BM_EnumerateSerial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto x = std::make_shared<const FiniteRep>(regular_string(n, static_cast<std::uint64_t>(st.range(1))));
  for (auto _ : st) benchmark::DoNotOptimize(reference::enumerate_subreps(x, middle_type(n)));
}

void BM_BoxScanParallel(benchmark::State& st) {
  const auto h = kronecker_3delta_cell().hypersurface;
  for (auto _ : st) benchmark::DoNotOptimize(singular_box_scan(h, st.range(0)));
}

void BM_BoxScanSerial(benchmark::State& st) {
  const auto h = kronecker_3delta_cell().hypersurface;
  for (auto _ : st) benchmark::DoNotOptimize(reference::singular_box_scan(h, st.range(0)));
}

}  // namespace

BENCHMARK(BM_CountParallel)->Args({3, 5})->Args({4, 3})->Args({4, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountSerial)->Args({3, 5})->Args({4, 3})->Args({4, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateParallel)->Args({3, 5})->Args({4, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Args({3, 5})->Args({4, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoxScanParallel)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoxScanSerial)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
