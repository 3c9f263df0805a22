#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "corpus.hpp"
#include "eqc/defective.hpp"
#include "eqc/gamma.hpp"

using namespace eqc;
using namespace eqc::test;

namespace {

std::uint64_t missing_in(const Graph& g, const std::vector<Vertex>& set) {
    return pair_count(set.size()) - count_edges_within(g, set);
}

}  // namespace

TEST_SUITE("defective") {

TEST_CASE("candidate reduction by degree") {
    // Beating an incumbent of 3 with no missing edges allowed means a
    // 4-clique, so degree >= 3 is required; the path has none.
    Graph p4 = path(4);
    CHECK(reduce_candidates(p4, 3, 0).empty());

    Graph k4 = complete(4);
    CHECK(reduce_candidates(k4, 3, 0).size() == 4);

    // No lower bound, no constraint.
    CHECK(reduce_candidates(p4, 0, 0).size() == 4);
    // Budget at least lb keeps everything as well.
    CHECK(reduce_candidates(p4, 2, 2).size() == 4);
}

TEST_CASE("reduction cascades") {
    // The rule peels vertices useless for beating lb: endpoints fall first,
    // then the rest unravels because the path has no triangle.
    Graph p5 = path(5);
    CHECK(reduce_candidates(p5, 2, 0).empty());
    // Beating lb=1 only needs an edge, so every path vertex survives.
    CHECK(reduce_candidates(p5, 1, 0).size() == 5);
}

TEST_CASE("exact sizes on the named small graphs") {
    CHECK(max_defective_clique(k5_minus_edge(), 0).size == 4);
    CHECK(max_defective_clique(k5_minus_edge(), 1).size == 5);
    CHECK(max_defective_clique(edgeless(3), 3).size == 3);
    CHECK(max_defective_clique(triangle(), 0).size == 3);
    // All four vertices miss two edges (1-3 and 0-3), so k=1 is not enough.
    CHECK(max_defective_clique(triangle_pendant(), 0).size == 3);
    CHECK(max_defective_clique(triangle_pendant(), 1).size == 3);
    CHECK(max_defective_clique(triangle_pendant(), 2).size == 4);
}

TEST_CASE("witness always within budget") {
    for (std::uint64_t seed : {31ull, 32ull, 33ull}) {
        Graph g = random_graph(14, 0.5, seed);
        for (std::uint64_t k = 0; k <= 4; ++k) {
            DefectiveResult r = max_defective_clique(g, k);
            CHECK(r.optimal);
            CHECK(r.witness.size() == r.size);
            CHECK(missing_in(g, r.witness) <= k);
            CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
        }
    }
}

TEST_CASE("seed solutions are honored and validated") {
    Graph g = k5_minus_edge();
    std::vector<Vertex> good{2, 3, 4};
    DefectiveResult r = max_defective_clique(g, 0, good);
    CHECK(r.size == 4);

    // A seed that busts the budget is the caller's bug.
    std::vector<Vertex> infeasible{0, 1, 2};  // missing edge 0-1, k=0
    CHECK_THROWS_AS(max_defective_clique(g, 0, infeasible), std::invalid_argument);
    std::vector<Vertex> dup{2, 2};
    CHECK_THROWS_AS(max_defective_clique(g, 0, dup), std::invalid_argument);
}

TEST_CASE("node budget reports non-optimal completion") {
    Graph g = random_graph(16, 0.8, 9);
    SearchBudget tight;
    tight.node_limit = 1;
    DefectiveResult r = max_defective_clique(g, 2, {}, tight);
    // With one node of budget the search cannot finish; the incumbent must
    // still be a valid 2-defective set.
    CHECK_FALSE(r.optimal);
    CHECK(missing_in(g, r.witness) <= 2);
}

TEST_CASE("empty and single-vertex graphs") {
    CHECK(max_defective_clique(edgeless(1), 0).size == 1);
    Graph g0 = edgeless(0);
    CHECK(max_defective_clique(g0, 5).size == 0);
}

}  // TEST_SUITE
