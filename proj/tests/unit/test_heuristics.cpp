#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "corpus.hpp"
#include "eqc/heuristics.hpp"
#include "eqc/oracle.hpp"

using namespace eqc;
using namespace eqc::test;

TEST_SUITE("heuristics") {

TEST_CASE("tie-break stream is a pure function of the seed") {
    TieBreakRng a(42), b(42), c(43);
    bool all_equal = true;
    bool any_diff = false;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t va = a.next();
        all_equal = all_equal && (va == b.next());
        any_diff = any_diff || (va != c.next());
    }
    CHECK(all_equal);
    CHECK(any_diff);
    TieBreakRng d(7);
    for (int i = 0; i < 50; ++i) CHECK(d.pick(13) < 13);
}

TEST_CASE("score updates match the push-pull formula") {
    // S={0,1}, C={2}, edges 0-1 and 0-2, max degree 2.
    Graph g = make_graph(3, {{0, 1}, {0, 2}});
    ScoreState st(g);
    st.reset_to_seed(0);
    st.move_to_selected(1);
    update_scores(st);
    CHECK(st.score(0) == -1);  // one candidate neighbor minus max degree
    CHECK(st.score(1) == -2);
    CHECK(st.score(2) == 1);   // one selected neighbor
}

TEST_CASE("moves keep incremental counters exact and reset scores") {
    Graph g = random_graph(12, 0.5, 8);
    ScoreState st(g);
    st.reset_to_seed(3);
    TieBreakRng rng(1);
    for (int i = 0; i < 6; ++i) add_best_vertex(st, rng);
    update_scores(st);
    Vertex moved = remove_worst_vertex(st, rng);
    CHECK(st.score(moved) == 0);

    std::vector<Vertex> sel = st.selected();
    std::sort(sel.begin(), sel.end());
    CHECK(st.internal_edges() == count_edges_within(g, sel));
    CHECK(st.selected().size() + st.candidates().size() == g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Vertex expect = 0;
        for (Vertex w : g.neighbors(v)) expect += st.in_selected(w);
        CHECK(st.deg_into_selected(v) == expect);
    }
}

TEST_CASE("add picks max selected-degree first, then score") {
    // S={0,1}; 2 is adjacent to both, 3 only to 0.
    Graph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    ScoreState st(g);
    st.reset_to_seed(0);
    st.move_to_selected(1);
    TieBreakRng rng(5);
    auto got = add_best_vertex(st, rng);
    REQUIRE(got.has_value());
    CHECK(*got == 2);

    // Degree tie between 2 and 3 once scores disagree.
    ScoreState st2(g);
    st2.reset_to_seed(3);  // S={3}; both 0 is adjacent, 1,2 are not
    st2.move_to_selected(0);
    // Now d_S(1) == d_S(2) == 1 (adjacent to 0 only); bias the score.
    st2.add_score(1, 5);
    auto got2 = add_best_vertex(st2, rng);
    REQUIRE(got2.has_value());
    CHECK(*got2 == 1);
}

TEST_CASE("add returns nothing when no candidates remain") {
    Graph g = triangle();
    ScoreState st(g);
    st.reset_to_seed(0);
    TieBreakRng rng(1);
    CHECK(add_best_vertex(st, rng).has_value());
    CHECK(add_best_vertex(st, rng).has_value());
    CHECK_FALSE(add_best_vertex(st, rng).has_value());
}

TEST_CASE("remove picks min selected-degree, forced on singleton, errors on empty") {
    // Triangle 0,1,2 minus edge 1-2: d_S(0)=2, d_S(1)=d_S(2)=1.
    Graph g = make_graph(3, {{0, 1}, {0, 2}});
    ScoreState st(g);
    st.reset_to_seed(0);
    st.move_to_selected(1);
    st.move_to_selected(2);
    TieBreakRng rng(3);
    Vertex out = remove_worst_vertex(st, rng);
    CHECK((out == 1 || out == 2));

    ScoreState st2(g);
    st2.reset_to_seed(1);
    CHECK(remove_worst_vertex(st2, rng) == 1);
    CHECK_THROWS_AS(remove_worst_vertex(st2, rng), std::logic_error);
}

TEST_CASE("full ties resolve identically under the same seed") {
    Graph g = edgeless(9);
    for (std::uint64_t seed : {1ull, 9ull, 100ull}) {
        ScoreState s1(g), s2(g);
        s1.reset_to_seed(0);
        s2.reset_to_seed(0);
        TieBreakRng r1(seed), r2(seed);
        for (int i = 0; i < 5; ++i) {
            auto a = add_best_vertex(s1, r1);
            auto b = add_best_vertex(s2, r2);
            REQUIRE(a.has_value());
            CHECK(*a == *b);
        }
    }
}

TEST_CASE("ordering suffix heuristic on the named graphs") {
    Gamma g07 = Gamma::parse("0.7");
    CHECK(suffix_heuristic(triangle_pendant(), g07).sorted_members() ==
          std::vector<Vertex>{0, 1, 2});
    CHECK(suffix_heuristic(complete(4), Gamma::parse("0.9")).size() == 4);
    CHECK(suffix_heuristic(edgeless(5), Gamma::parse("0.5")).size() == 1);
    CHECK(suffix_heuristic(star4(), Gamma::parse("0.6")).size() == 3);
}

TEST_CASE("neighborhood variant dominates the plain suffix") {
    Gamma g09 = Gamma::parse("0.9");
    // K4 next to a disjoint triangle; the best closed neighborhood is the K4.
    Graph g = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                             {4, 5}, {4, 6}, {5, 6}});
    VertexSelection best = neighborhood_suffix_heuristic(g, g09);
    CHECK(best.size() == 4);
    CHECK(best.sorted_members() == std::vector<Vertex>{0, 1, 2, 3});

    for (std::uint64_t seed : {41ull, 42ull, 43ull, 44ull}) {
        Graph r = random_graph(15, 0.4, seed);
        CHECK(neighborhood_suffix_heuristic(r, g09).size() >=
              suffix_heuristic(r, g09).size());
    }
}

TEST_CASE("local search climbs K4 from a single vertex") {
    Gamma g09 = Gamma::parse("0.9");
    TieBreakRng rng(0);
    std::vector<Vertex> seed{0};
    VertexSelection out = local_search(complete(4), g09, seed, rng);
    CHECK(out.size() == 4);
}

TEST_CASE("local search rejects infeasible seeds") {
    Gamma g09 = Gamma::parse("0.9");
    TieBreakRng rng(0);
    Graph p = path(4);
    std::vector<Vertex> ends{0, 3};  // non-adjacent, 0 of 1 pairs
    CHECK_THROWS_AS(local_search(p, g09, ends, rng), std::invalid_argument);
}

TEST_CASE("local search never shrinks the seed") {
    Gamma g07 = Gamma::parse("0.7");
    for (std::uint64_t seed : {51ull, 52ull, 53ull}) {
        Graph g = random_graph(12, 0.5, seed);
        std::vector<Vertex> start = random_feasible_set(g, g07, seed + 1);
        TieBreakRng rng(seed);
        VertexSelection out = local_search(g, g07, start, rng);
        CHECK(out.size() >= start.size());
        CHECK(out.feasible(g07));
    }
}

TEST_CASE("expansion grows the pendant seed to the triangle") {
    Gamma g07 = Gamma::parse("0.7");
    TieBreakRng rng(0);
    std::vector<Vertex> seed{2};
    VertexSelection out = expand_solution(triangle_pendant(), g07, seed, rng);
    CHECK(out.size() == 3);
}

TEST_CASE("expansion is monotone and feasible on random pairs") {
    Gamma g07 = Gamma::parse("0.7");
    int pairs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_graph(11, 0.45, 900 + seed);
        for (std::uint64_t s2 = 0; s2 < 2; ++s2) {
            std::vector<Vertex> start = random_feasible_set(g, g07, seed * 2 + s2);
            TieBreakRng rng(seed);
            VertexSelection out = expand_solution(g, g07, start, rng);
            CHECK(out.size() >= start.size());
            std::vector<Vertex> members = out.sorted_members();
            CHECK(is_quasi_clique(g, members, g07));
            ++pairs;
        }
    }
    CHECK(pairs == 200);
}

TEST_CASE("fixed seed gives byte-identical results") {
    Gamma g07 = Gamma::parse("0.7");
    for (std::uint64_t seed : {61ull, 62ull}) {
        Graph g = random_graph(13, 0.5, seed);
        std::vector<Vertex> start = random_feasible_set(g, g07, seed);
        TieBreakRng r1(99), r2(99);
        VertexSelection a = expand_solution(g, g07, start, r1);
        VertexSelection b = expand_solution(g, g07, start, r2);
        CHECK(a.sorted_members() == b.sorted_members());
        TieBreakRng r3(99), r4(99);
        CHECK(local_search(g, g07, start, r3).sorted_members() ==
              local_search(g, g07, start, r4).sorted_members());
    }
}

TEST_CASE("heuristics never beat the exhaustive optimum") {
    for (std::uint64_t seed : {71ull, 72ull, 73ull, 74ull, 75ull}) {
        Graph g = random_graph(12, 0.5, seed);
        for (const char* lit : {"0.7", "0.9"}) {
            Gamma gamma = Gamma::parse(lit);
            std::uint64_t best = brute_max_quasi_clique(g, gamma).size;
            CHECK(suffix_heuristic(g, gamma).size() <= best);
            VertexSelection nb = neighborhood_suffix_heuristic(g, gamma);
            CHECK(nb.size() <= best);
            TieBreakRng rng(seed);
            CHECK(expand_solution(g, gamma, nb.sorted_members(), rng).size() <= best);
        }
    }
}

}  // TEST_SUITE
