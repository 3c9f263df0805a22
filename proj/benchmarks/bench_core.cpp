// Micro benchmarks for the hot paths: preprocessing (degeneracy, coloring),
// the exact defective-clique solver across budgets, and the full iterative
// pipeline. Run manually; these are not part of the test suite.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "eqc/coloring.hpp"
#include "eqc/defective.hpp"
#include "eqc/degeneracy.hpp"
#include "eqc/frameworks.hpp"
#include "eqc/graph.hpp"

namespace {

eqc::Graph random_graph(eqc::Vertex n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<eqc::Vertex, eqc::Vertex>> edges;
    for (eqc::Vertex u = 0; u < n; ++u)
        for (eqc::Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return eqc::Graph::from_edges(n, edges);
}

// Sparse background with a planted dense block, the regime the solver is
// built for.
eqc::Graph planted(eqc::Vertex n, eqc::Vertex clique, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(2.0 / n);
    std::vector<std::pair<eqc::Vertex, eqc::Vertex>> edges;
    for (eqc::Vertex u = 0; u < clique; ++u)
        for (eqc::Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
    for (eqc::Vertex u = 0; u < n; ++u)
        for (eqc::Vertex v = std::max(u + 1, clique); v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return eqc::Graph::from_edges(n, edges);
}

void BM_DegeneracyOrdering(benchmark::State& state) {
    eqc::Graph g = random_graph(static_cast<eqc::Vertex>(state.range(0)), 0.1, 11);
    for (auto _ : state) {
        auto ord = eqc::degeneracy_ordering(g);
        benchmark::DoNotOptimize(ord.degeneracy);
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_DegeneracyOrdering)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_GreedyColoringBound(benchmark::State& state) {
    eqc::Graph g = random_graph(static_cast<eqc::Vertex>(state.range(0)), 0.1, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eqc::defective_clique_ub(g, 3));
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_GreedyColoringBound)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_DefectiveSolver(benchmark::State& state) {
    eqc::Graph g = planted(2000, 24, 13);
    auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto r = eqc::max_defective_clique(g, k);
        benchmark::DoNotOptimize(r.size);
    }
}
BENCHMARK(BM_DefectiveSolver)->DenseRange(0, 8, 2);

void BM_SolvePipeline(benchmark::State& state) {
    eqc::Graph g = planted(static_cast<eqc::Vertex>(state.range(0)), 24, 14);
    eqc::Gamma gamma = eqc::Gamma::parse("0.95");
    for (auto _ : state) {
        auto r = eqc::solve_memoized(g, gamma, 7);
        benchmark::DoNotOptimize(r.optimal_size);
    }
}
BENCHMARK(BM_SolvePipeline)->Arg(500)->Arg(2000)->Arg(8000);

}  // namespace

BENCHMARK_MAIN();
