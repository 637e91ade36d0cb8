#include "asymih/algebra.hpp"
#include "asymih/asymptotic.hpp"
#include "asymih/complex_io.hpp"
#include "asymih/corpus.hpp"
#include "asymih/linalg.hpp"
#include "asymih/models.hpp"
#include "asymih/parse.hpp"

#include <benchmark/benchmark.h>

using namespace asymih;

namespace {

void BM_Resultant(benchmark::State& state) {
    const std::vector<std::string> vars{"x", "y", "y1", "y2"};
    const auto n = static_cast<int>(state.range(0));
    const Poly f = parse_poly("x^" + std::to_string(n) + " + x*y^2 - y1", vars);
    const Poly g = parse_poly("x*y^" + std::to_string(n) + " + y - y2", vars);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, 0));
}
BENCHMARK(BM_Resultant)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BoundaryRank(benchmark::State& state) {
    const auto x = load_complex_file(resolve_complex(state.range(0) ? "disk_x_pinched" : "suspension_torus_sd"));
    const int top = x.dim();
    for (auto _ : state) {
        std::size_t r = 0;
        for (int i = 1; i <= top; ++i) r += rank(boundary_matrix(x, i));
        benchmark::DoNotOptimize(r);
    }
    state.counters["simplices"] = static_cast<double>(x.size());
}
BENCHMARK(BM_BoundaryRank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IhBetti(benchmark::State& state) {
    static const char* names[] = {"pinched_torus", "suspension_torus_sd", "disk_x_pinched", "ball4_sd"};
    const auto f = load_filtration(resolve_complex(names[state.range(0)]));
    const auto p = standard_perversities(f.m()).top;
    for (auto _ : state) benchmark::DoNotOptimize(ih_betti(f, p));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_IhBetti)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_JelonekSet(benchmark::State& state) {
    static const char* maps[] = {"(x, x*y)", "(x, x*y^2 + y)", "(x^2, x*y)"};
    const PolyMap f = parse_map(maps[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(jelonek_set(f));
    state.SetLabel(maps[state.range(0)]);
}
BENCHMARK(BM_JelonekSet)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_AutomorphismProperness(benchmark::State& state) {
    const auto corpus = automorphism_corpus(1, 4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& f : corpus) benchmark::DoNotOptimize(is_proper(f));
    }
}
BENCHMARK(BM_AutomorphismProperness)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
