#include <benchmark/benchmark.h>
#include <omp.h>

#include "torreg/tables.hpp"

using namespace torreg;

namespace {

std::vector<ParamPoint> pure_grid() {
  std::vector<ParamPoint> g;
  for (long k = 1; k <= 6; ++k)
    for (long d : {1, 2, 3}) {
      ParamPoint x{mpq_class(k, d), 1};
      x.a.canonicalize();
      g.push_back(x);
    }
  return g;
}

std::vector<ParamPoint> blended_grid() {
  const auto fr = fractions(2, 3);
  return grid_ab(fr, fr);
}

void BM_PureScanSerial(benchmark::State& st) {
  const auto g = pure_grid();
  for (auto _ : st) benchmark::DoNotOptimize(scan_parameters_serial("{4,6|4}", Family::bcc, g));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
}

void BM_PureScanParallel(benchmark::State& st) {
  const auto g = pure_grid();
  omp_set_num_threads(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(scan_parameters("{4,6|4}", Family::bcc, g));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
  st.counters["threads"] = static_cast<double>(st.range(0));
}

void BM_BlendedScanSerial(benchmark::State& st) {
  const auto g = blended_grid();
  for (auto _ : st) benchmark::DoNotOptimize(scan_parameters_serial("{4,4}#{inf}", Family::fcc, g));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
}

void BM_BlendedScanParallel(benchmark::State& st) {
  const auto g = blended_grid();
  omp_set_num_threads(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(scan_parameters("{4,4}#{inf}", Family::fcc, g));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
  st.counters["threads"] = static_cast<double>(st.range(0));
}

void BM_SingleQuotient(benchmark::State& st) {
  const Lattice l = make_named(Family::cubic, Surd(2));
  for (auto _ : st) benchmark::DoNotOptimize(check_regular(quotient(spec("{4,6|4}"), l)));
}

}  // namespace

BENCHMARK(BM_PureScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PureScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BlendedScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlendedScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SingleQuotient)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
