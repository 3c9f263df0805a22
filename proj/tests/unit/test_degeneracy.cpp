#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "eqc/degeneracy.hpp"

using namespace eqc;
using namespace eqc::test;

TEST_SUITE("degeneracy") {

TEST_CASE("triangle with min-index tie-break") {
    DegeneracyOrdering ord = degeneracy_ordering(triangle());
    CHECK(ord.order == std::vector<Vertex>{0, 1, 2});
    CHECK(ord.degeneracy == 2);
}

TEST_CASE("star removes a leaf first") {
    // Once leaves 1 and 2 are gone the center drops to degree 1 and the
    // min-index tie-break removes it ahead of the remaining leaf.
    DegeneracyOrdering ord = degeneracy_ordering(star4());
    CHECK(ord.order == std::vector<Vertex>{1, 2, 0, 3});
    CHECK(ord.degeneracy == 1);
}

TEST_CASE("pendant goes before the triangle") {
    DegeneracyOrdering ord = degeneracy_ordering(triangle_pendant());
    CHECK(ord.order == std::vector<Vertex>{3, 0, 1, 2});
    CHECK(ord.degeneracy == 2);
}

TEST_CASE("position inverts order") {
    Graph g = random_graph(30, 0.3, 7);
    DegeneracyOrdering ord = degeneracy_ordering(g);
    REQUIRE(ord.order.size() == 30);
    for (Vertex i = 0; i < 30; ++i) CHECK(ord.position[ord.order[i]] == i);
}

TEST_CASE("each removed vertex has minimum degree among the remainder") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph g = random_graph(40, 0.2, seed);
        DegeneracyOrdering ord = degeneracy_ordering(g);
        std::vector<char> removed(g.vertex_count(), 0);
        for (Vertex i = 0; i < g.vertex_count(); ++i) {
            Vertex v = ord.order[i];
            auto residual = [&](Vertex u) {
                Vertex d = 0;
                for (Vertex w : g.neighbors(u)) d += !removed[w];
                return d;
            };
            Vertex dv = residual(v);
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                if (!removed[u]) CHECK(dv <= residual(u));
            }
            CHECK(ord.core[v] >= dv);
            removed[v] = 1;
        }
        CHECK(ord.degeneracy ==
              *std::max_element(ord.core.begin(), ord.core.end()));
    }
}

TEST_CASE("edgeless and empty graphs") {
    DegeneracyOrdering ord = degeneracy_ordering(edgeless(4));
    CHECK(ord.order == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(ord.degeneracy == 0);
    DegeneracyOrdering none = degeneracy_ordering(edgeless(0));
    CHECK(none.order.empty());
    CHECK(none.degeneracy == 0);
}

}  // TEST_SUITE
