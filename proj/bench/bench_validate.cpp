// Serial reference vs OpenMP kernels for the unstable-algebra axiom sweep and
// for catalog verification.

#include <benchmark/benchmark.h>

#include "conjzoo/alg_format.hpp"
#include "conjzoo/catalog.hpp"

using namespace conjzoo;

namespace {

// F2[c, d, e] truncated at c^8, d^6, e^4 with nontrivial generator squares.
UnstableAlgebra big_algebra(int scale) {
  std::string text = "polynomial Big\ngen c 1 " + std::to_string(3 + 2 * scale) + "\ngen d 2 " +
                     std::to_string(1 + 2 * scale) + "\ngen e 4 " + std::to_string(1 + scale) +
                     "\nSq1 d = c*d\nfundamental top\nend\n";
  return alg::parse(text);
}

void BM_ValidateSerial(benchmark::State& state) {
  const auto a = big_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::validate_serial(a, ValidationScope::Full));
  state.counters["basis"] = static_cast<double>(a.size());
}

void BM_ValidateParallel(benchmark::State& state) {
  const auto a = big_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::validate_parallel(a, ValidationScope::Full));
  state.counters["basis"] = static_cast<double>(a.size());
}

void BM_CatalogSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(catalog_verify_serial());
}

void BM_CatalogParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(catalog_verify("all"));
}

}  // namespace

BENCHMARK(BM_ValidateSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalogSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalogParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
