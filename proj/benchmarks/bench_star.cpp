#include <benchmark/benchmark.h>

#include "vircoad/laurent.hpp"

using namespace vircoad;

static void BM_StarProduct(benchmark::State& state) {
    LaurentPoly2 F, G;
    for (int i = -2; i <= 2; ++i) {
        F.add_term(i, 2 - i, Rational(i + 3, 2));
        G.add_term(2 - i, i, Rational(5 - i, 3));
    }
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(star(F, G, order));
}
BENCHMARK(BM_StarProduct)->Arg(2)->Arg(4);
