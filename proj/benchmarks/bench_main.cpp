#include <benchmark/benchmark.h>

#include <random>

#include "hydra/bounds.hpp"
#include "hydra/families.hpp"
#include "hydra/hypergraph.hpp"
#include "hydra/line_graph.hpp"
#include "hydra/path_cover.hpp"
#include "hydra/represent.hpp"
#include "hydra/solver.hpp"

namespace {

hydra::DirectedHypergraph random_hypergraph(int n, int arcs, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<hydra::Hyperarc> out;
    while (static_cast<int>(out.size()) < arcs) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n),
            w = static_cast<int>(rng() % n);
        if (u == v || w == u || w == v) continue;
        out.emplace_back(u, v, w);
    }
    return hydra::DirectedHypergraph(n, std::move(out));
}

void BM_closure(benchmark::State& state) {
    auto h = random_hypergraph(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)) * 4, 42);
    std::vector<hydra::Vertex> seeds{0, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hydra::closure(h, seeds));
    }
}
BENCHMARK(BM_closure)->Arg(16)->Arg(32)->Arg(63);

void BM_represents_gk(benchmark::State& state) {
    auto gc = hydra::gk_certificate(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hydra::represents(gc.hypergraph, gc.graph).ok);
    }
}
BENCHMARK(BM_represents_gk)->Arg(2)->Arg(4);

void BM_solver_tk(benchmark::State& state) {
    auto g = hydra::make_tk(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hydra::hydra_number(g).value);
    }
}
BENCHMARK(BM_solver_tk)->Arg(3)->Arg(4);

void BM_min_path_cover_lb3(benchmark::State& state) {
    auto host = hydra::line_graph(hydra::make_binary_tree(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hydra::min_path_cover(host).cover.size());
    }
}
BENCHMARK(BM_min_path_cover_lb3);

void BM_p_exhaustive_t4(benchmark::State& state) {
    auto g = hydra::make_tk(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hydra::p_of(g, hydra::PStrategy::Exhaustive).value);
    }
}
BENCHMARK(BM_p_exhaustive_t4);

}  // namespace

BENCHMARK_MAIN();
