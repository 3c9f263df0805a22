#pragma once

#include <span>
#include <vector>

#include "eqc/degeneracy.hpp"
#include "eqc/graph.hpp"

namespace eqc {

struct ColoringSummary {
    std::vector<Vertex> color_of;    // per vertex, 0-based color ids
    std::vector<Vertex> class_size;  // vertices per color class
    Vertex num_colors() const { return static_cast<Vertex>(class_size.size()); }
};

// Greedy proper coloring in reverse removal order (densest part first), so
// at most degeneracy+1 colors are used.
ColoringSummary greedy_color(const Graph& g, const DegeneracyOrdering& ord);

// Upper bound on the size of any vertex set whose induced subgraph misses at
// most `budget` edges, derived from a proper-coloring histogram: a set taking
// t vertices of one color class carries at least pair_count(t) missing edges.
// Monotone non-decreasing in `budget` for a fixed histogram; the returned
// value never exceeds the number of colored vertices.
std::uint64_t defective_clique_ub(std::span<const Vertex> class_size,
                                  std::uint64_t budget);

// Convenience: colors g along its own degeneracy ordering first.
std::uint64_t defective_clique_ub(const Graph& g, std::uint64_t budget);

} // namespace eqc
