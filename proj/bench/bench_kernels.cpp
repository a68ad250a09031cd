#include <benchmark/benchmark.h>

#include "rauzy/boundary_graph.hpp"
#include "rauzy/kernels.hpp"
#include "rauzy/render.hpp"

using namespace rauzy;

namespace {

void BM_ScanBoxSerial(benchmark::State& st)
{
    const Embedding emb(Params(int(st.range(0)), int(st.range(1))));
    const auto box = candidate_box(emb);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::scan_box_serial(emb, box));
}

void BM_ScanBoxOmp(benchmark::State& st)
{
    const Embedding emb(Params(int(st.range(0)), int(st.range(1))));
    const auto box = candidate_box(emb);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::scan_box_omp(emb, box));
}

struct Pair {
    kernels::Polyline coarse, fine;
    explicit Pair(int n)
    {
        const Params p(10, 7);
        const Embedding emb(p);
        const auto g = ordered_graph(p);
        coarse = approximation(emb, g, n);
        fine = approximation(emb, g, n + 1);
    }
};

void BM_HausdorffSerial(benchmark::State& st)
{
    const Pair q(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::directed_hausdorff_serial(q.fine, q.coarse, 1e-4));
}

void BM_HausdorffOmp(benchmark::State& st)
{
    const Pair q(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::directed_hausdorff_omp(q.fine, q.coarse, 1e-4));
}

void BM_TilePointsSerial(benchmark::State& st)
{
    const Embedding emb(Params(1, 1));
    for (auto _ : st) benchmark::DoNotOptimize(tile_points(emb, 1, int(st.range(0))));
}

void BM_TilePointsOmp(benchmark::State& st)
{
    const Embedding emb(Params(1, 1));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::tile_points_omp(emb, 1, int(st.range(0))));
}

} // namespace

BENCHMARK(BM_ScanBoxSerial)->Args({1, 1})->Args({8, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanBoxOmp)->Args({1, 1})->Args({8, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HausdorffSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HausdorffOmp)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TilePointsSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TilePointsOmp)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
