#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "corpus.hpp"
#include "eqc/frameworks.hpp"
#include "eqc/oracle.hpp"

using namespace eqc;
using namespace eqc::test;

TEST_SUITE("frameworks") {

TEST_CASE("probe answers the at-least-s question") {
    Graph g = k5_minus_edge();
    Gamma g09 = Gamma::parse("0.9");
    // 5 vertices, budget floor(0.1 * 10) = 1, and exactly one edge is absent.
    ProbeOutcome five = probe_size(g, g09, 5);
    CHECK(five.feasible);
    CHECK(five.result.size == 5);

    Gamma g07 = Gamma::parse("0.7");
    ProbeOutcome four = probe_size(triangle_pendant(), g07, 4);
    CHECK_FALSE(four.feasible);
    CHECK(four.result.size == 3);

    CHECK_THROWS_AS(probe_size(g, g09, 0), std::invalid_argument);
}

TEST_CASE("size upper bound on the named graphs") {
    CHECK(size_upper_bound(k5_minus_edge(), Gamma::parse("0.9")) == 5);
    // Triangle at 0.5: the edge-count estimate starts at 4, coloring rounds
    // pull it toward the true optimum of 3 without crossing it.
    std::uint64_t tri_ub = size_upper_bound(triangle(), Gamma::parse("0.5"));
    CHECK(tri_ub >= 3);
    CHECK(tri_ub <= 4);
    CHECK_THROWS_AS(size_upper_bound(edgeless(3), Gamma::parse("0.5")),
                    std::invalid_argument);
}

TEST_CASE("upper bound dominates the optimum on random graphs") {
    for (std::uint64_t seed : {81ull, 82ull, 83ull, 84ull}) {
        Graph g = random_graph(12, 0.5, seed);
        if (g.edge_count() == 0) continue;
        for (const char* lit : {"0.5", "0.9"}) {
            Gamma gamma = Gamma::parse(lit);
            CHECK(size_upper_bound(g, gamma) >= brute_max_quasi_clique(g, gamma).size);
        }
    }
}

TEST_CASE("top down reaches the fixpoint") {
    SolveResult r = solve_top_down(k5_minus_edge(), Gamma::parse("0.9"));
    CHECK(r.solved);
    CHECK(r.optimal_size == 5);

    SolveResult k4 = solve_top_down(complete(4), Gamma::parse("0.95"));
    CHECK(k4.optimal_size == 4);

    SolveResult empty = solve_top_down(edgeless(4), Gamma::parse("0.5"));
    CHECK(empty.optimal_size == 1);
    CHECK(empty.witness.size() == 1);
}

TEST_CASE("bottom up doubling trace on the near-clique") {
    SolveResult r = solve_bottom_up(k5_minus_edge(), Gamma::parse("0.9"));
    CHECK(r.solved);
    CHECK(r.optimal_size == 5);
    CHECK(r.trace.check_calls() == 3);
    std::vector<std::uint64_t> probed;
    for (const auto& e : r.trace.events) probed.push_back(e.probed_size);
    CHECK(probed == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("bottom up accepts a starting solution and rejects infeasible ones") {
    Graph g = k5_minus_edge();
    Gamma g09 = Gamma::parse("0.9");
    std::vector<Vertex> start{1, 2, 3, 4};
    SolveResult r = solve_bottom_up(g, g09, start);
    CHECK(r.optimal_size == 5);

    std::vector<Vertex> bogus{0, 1};  // the absent edge
    CHECK_THROWS_AS(solve_bottom_up(g, g09, bogus), std::invalid_argument);
}

TEST_CASE("bottom up starting at the optimum still proves it") {
    Graph g = k5_minus_edge();
    std::vector<Vertex> all{0, 1, 2, 3, 4};
    SolveResult r = solve_bottom_up(g, Gamma::parse("0.9"), all);
    CHECK(r.solved);
    CHECK(r.optimal_size == 5);
}

TEST_CASE("memoized pipeline matches on small graphs") {
    Gamma g09 = Gamma::parse("0.9");
    SolveResult r = solve_memoized(k5_minus_edge(), g09);
    CHECK(r.solved);
    CHECK(r.optimal_size == 5);
    CHECK(is_quasi_clique(k5_minus_edge(), r.witness, g09));

    SolveResult tri = solve_memoized(triangle_pendant(), Gamma::parse("0.7"));
    CHECK(tri.optimal_size == 3);
}

TEST_CASE("trivial inputs") {
    Gamma g05 = Gamma::parse("0.5");
    CHECK(solve_memoized(edgeless(0), g05).optimal_size == 0);
    CHECK(solve_memoized(edgeless(5), g05).optimal_size == 1);
    CHECK(solve_bottom_up(edgeless(5), g05).optimal_size == 1);
    CHECK(solve_top_down(edgeless(0), g05).optimal_size == 0);
    // A single edge at high gamma: the pair is complete, s* = 2.
    Graph e1 = make_graph(2, {{0, 1}});
    CHECK(solve_memoized(e1, Gamma::parse("0.99")).optimal_size == 2);
}

TEST_CASE("cache stores only exact entries and collision sizes reuse them") {
    DefectiveCache cache;
    DefectiveResult fake;
    fake.size = 3;
    fake.optimal = false;
    CHECK_THROWS_AS(cache.store(1, fake), std::invalid_argument);
    fake.optimal = true;
    cache.store(1, fake);
    CHECK(cache.size() == 1);
    REQUIRE(cache.find(1) != nullptr);
    CHECK(cache.find(1)->size == 3);
    CHECK(cache.find(2) == nullptr);
}

TEST_CASE("memoized run on the collision instance reuses the budget-1 solve") {
    Graph g = memo_collision_graph();
    Gamma g95 = Gamma::parse("0.95");
    SolveResult r = solve_memoized(g, g95);
    CHECK(r.solved);
    CHECK(r.optimal_size == 8);
    CHECK(r.trace.memo_hits() >= 1);
    CHECK(r.trace.check_calls() == 2);
    // The two probes straddle sizes 8 and 9, both with one missing edge
    // allowed, so the second is answered from the cache.
    bool saw_repeat = false;
    std::vector<std::uint64_t> seen;
    for (const auto& e : r.trace.events) {
        if (std::find(seen.begin(), seen.end(), e.k) != seen.end()) {
            saw_repeat = true;
            CHECK(e.memo_hit);
        }
        seen.push_back(e.k);
    }
    CHECK(saw_repeat);
}

TEST_CASE("memoization does not change the answer") {
    for (std::uint64_t seed : {91ull, 92ull, 93ull}) {
        Graph g = random_graph(13, 0.5, seed);
        Gamma g09 = Gamma::parse("0.9");
        DefectiveCache cache;
        SolveResult with = solve_memoized(g, g09, 7, {}, &cache);
        SolveResult without = solve_memoized(g, g09, 7, {}, nullptr);
        CHECK(with.optimal_size == without.optimal_size);
        CHECK(without.trace.memo_hits() == 0);
    }
}

TEST_CASE("budget exhaustion reports unsolved with a usable witness") {
    Graph g = random_graph(16, 0.8, 1234);
    Gamma g09 = Gamma::parse("0.9");
    SearchBudget strangled;
    strangled.node_limit = 1;
    SolveResult r = solve_bottom_up(g, g09, {}, strangled);
    CHECK_FALSE(r.solved);
    CHECK(is_quasi_clique(g, r.witness, g09));
    CHECK(r.optimal_size == r.witness.size());
}

TEST_CASE("solver results agree across frameworks on random graphs") {
    for (std::uint64_t seed : {101ull, 102ull, 103ull, 104ull, 105ull}) {
        Graph g = random_graph(11, 0.6, seed);
        for (const char* lit : {"0.5", "0.7", "0.9"}) {
            Gamma gamma = Gamma::parse(lit);
            std::uint64_t expect = brute_max_quasi_clique(g, gamma).size;
            CHECK(solve_top_down(g, gamma).optimal_size == expect);
            CHECK(solve_bottom_up(g, gamma).optimal_size == expect);
            CHECK(solve_memoized(g, gamma).optimal_size == expect);
        }
    }
}

}  // TEST_SUITE
