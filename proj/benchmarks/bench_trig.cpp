#include <benchmark/benchmark.h>

#include "vircoad/diffeo.hpp"
#include "vircoad/rng.hpp"
#include "vircoad/trig.hpp"

using namespace vircoad;

static void BM_TrigProduct(benchmark::State& state) {
    Rng rng(1);
    const TrigPoly f = random_trig(rng, static_cast<int>(state.range(0)));
    const TrigPoly g = random_trig(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_TrigProduct)->Arg(8)->Arg(32)->Arg(64);

static void BM_Projection(benchmark::State& state) {
    Rng rng(2);
    const TrigPoly f = random_trig(rng, 32);
    const QuadratureGrid grid(256);
    std::vector<double> samples(256);
    for (int j = 0; j < 256; ++j) samples[static_cast<size_t>(j)] = f(grid.node(j));
    for (auto _ : state) benchmark::DoNotOptimize(project_periodic(samples, 64));
}
BENCHMARK(BM_Projection);

static void BM_Compose(benchmark::State& state) {
    Rng rng(3);
    const CircleDiffeo f = random_diffeo(rng, 8, 0.3);
    const CircleDiffeo g = random_diffeo(rng, 8, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose);
