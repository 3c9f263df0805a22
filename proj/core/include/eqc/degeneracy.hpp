#pragma once

#include <vector>

#include "eqc/graph.hpp"

namespace eqc {

struct DegeneracyOrdering {
    std::vector<Vertex> order;    // removal order, repeatedly a min-degree vertex
    std::vector<Vertex> position; // inverse of order
    std::vector<Vertex> core;     // core number per vertex
    Vertex degeneracy = 0;
};

// Smallest-degree-last ordering. Ties go to the smallest vertex id, so the
// ordering is reproducible across runs. core[v] is the running maximum of
// residual degrees up to v's removal, degeneracy the overall maximum.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

} // namespace eqc
