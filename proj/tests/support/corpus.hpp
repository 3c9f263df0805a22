#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eqc/gamma.hpp"
#include "eqc/graph.hpp"

namespace eqc::test {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph make_graph(Vertex n, const EdgeList& edges);

// Small named graphs reused across suites.
Graph triangle();
Graph path(Vertex n);
Graph star4();            // center 0, leaves 1..3
Graph complete(Vertex n);
Graph k5_minus_edge();    // the missing edge is 0-1
Graph triangle_pendant(); // triangle 0,1,2 with pendant 3 on 2
Graph edgeless(Vertex n);

// Deterministic G(n, p): every pair kept independently. Same arguments,
// same graph, on any platform.
Graph random_graph(Vertex n, double density, std::uint64_t seed);

struct CorpusEntry {
    Vertex n;
    double density;
    std::uint64_t seed;
    Graph graph;
};

// The fixed random-graph suite the acceptance checks sweep: n in [4,16],
// densities {0.3, 0.5, 0.8}, 13 repetitions each -> 507 graphs.
std::vector<CorpusEntry> acceptance_corpus();

// Clique of the given size planted on a sparse background (expected
// background degree about 2). The clique sits on vertices 0..size-1.
Graph planted_clique_graph(Vertex n, Vertex clique_size, std::uint64_t seed);

// Instance where the memoized pipeline probes two sizes that map to the
// same missing-edge budget: a K8 core, decoy blocks that cap the heuristic
// at 7, and a separate component whose best feasible set is exactly 7 at
// gamma=0.95. The second probe must be answered from the cache.
Graph memo_collision_graph();

// Feasible vertex set grown greedily from a random start; used to sample
// (graph, set, gamma) triples. Never empty for n >= 1.
std::vector<Vertex> random_feasible_set(const Graph& g, const Gamma& gamma,
                                        std::uint64_t seed);

}  // namespace eqc::test
