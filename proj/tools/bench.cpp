// Serial reference vs OpenMP kernels. Thread count comes from BQK_THREADS
// or the OpenMP default; the Arg on each parallel benchmark overrides it.

#include <benchmark/benchmark.h>

#include "bqk/coloring.hpp"
#include "bqk/io.hpp"
#include "bqk/parallel.hpp"
#include "bqk/scan.hpp"

using namespace bqk;

namespace {

const DualGraphDiagram& big_link() {
    static const DualGraphDiagram G = [] {
        auto links = bundled_links();
        return to_dual_graph(find_entry(links, "L7a7")->diagram);
    }();
    return G;
}

const Biquasile& z7() {
    static const Biquasile B = alexander({7, 3, 5, 2});
    return B;
}

ScanConfig scan_config() {
    ScanConfig cfg;
    cfg.moduli = {2, 3, 4, 5};
    for (const auto& corpus : {bundled_knots(), bundled_links()})
        for (const auto& e : corpus)
            if (e.crossings() <= 7) cfg.corpus.push_back(e);
    return cfg;
}

void BM_colorings_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_colorings_serial(big_link(), z7()));
}

void BM_colorings_parallel(benchmark::State& st) {
    set_thread_count(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_colorings(big_link(), z7()));
    set_thread_count(0);
}

void BM_enumerate_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_biquasiles_serial(4));
}

void BM_enumerate_parallel(benchmark::State& st) {
    set_thread_count(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_biquasiles(4));
    set_thread_count(0);
}

void BM_scan_serial(benchmark::State& st) {
    const auto cfg = scan_config();
    for (auto _ : st) benchmark::DoNotOptimize(scan_conjecture_serial(cfg));
}

void BM_scan_parallel(benchmark::State& st) {
    const auto cfg = scan_config();
    set_thread_count(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(scan_conjecture(cfg));
    set_thread_count(0);
}

}  // namespace

BENCHMARK(BM_colorings_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_colorings_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
