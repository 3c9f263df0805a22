#include <doctest.h>

#include <random>
#include <stdexcept>

#include "corpus.hpp"
#include "eqc/selection.hpp"

using namespace eqc;
using namespace eqc::test;

TEST_SUITE("selection") {

TEST_CASE("incremental edge count matches definition") {
    Graph g = k5_minus_edge();
    VertexSelection s(g);
    s.add(0);
    CHECK(s.internal_edges() == 0);
    s.add(1);
    CHECK(s.internal_edges() == 0);  // 0-1 is absent
    s.add(2);
    CHECK(s.internal_edges() == 2);
    CHECK(s.missing_edges() == 1);
    s.remove(1);
    CHECK(s.internal_edges() == 1);
    CHECK(s.size() == 2);
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(1));
}

TEST_CASE("add rejects duplicates and bad ids") {
    Graph g = triangle();
    VertexSelection s(g);
    s.add(1);
    CHECK_THROWS_AS(s.add(1), std::invalid_argument);
    CHECK_THROWS_AS(s.add(17), std::out_of_range);
}

TEST_CASE("feasibility tracks gamma") {
    Graph g = star4();
    Gamma g06 = Gamma::parse("0.6");
    VertexSelection s(g);
    s.add(0);
    s.add(1);
    s.add(2);
    CHECK(s.feasible(g06));  // 2 of 3 pairs
    s.add(3);
    CHECK_FALSE(s.feasible(g06));  // 3 of 6 pairs < 0.6
}

TEST_CASE("random add/remove churn stays consistent with a recount") {
    Graph g = random_graph(18, 0.5, 99);
    VertexSelection s(g);
    std::mt19937_64 rng(5);
    for (int step = 0; step < 4000; ++step) {
        Vertex v = static_cast<Vertex>(rng() % 18);
        if (s.contains(v)) {
            s.remove(v);
        } else {
            s.add(v);
        }
        CHECK(s.internal_edges() == count_edges_within(g, s.sorted_members()));
        CHECK(s.missing_edges() + s.internal_edges() == pair_count(s.size()));
    }
}

TEST_CASE("sorted members vs insertion order") {
    Graph g = path(5);
    VertexSelection s(g);
    s.add(4);
    s.add(0);
    s.add(2);
    CHECK(s.members() == std::vector<Vertex>{4, 0, 2});
    CHECK(s.sorted_members() == std::vector<Vertex>{0, 2, 4});
}

}  // TEST_SUITE
