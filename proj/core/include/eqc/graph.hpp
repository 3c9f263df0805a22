#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "eqc/gamma.hpp"

namespace eqc {

using Vertex = std::uint32_t;

// Immutable undirected simple graph in CSR form. Neighbor lists are sorted
// ascending. Self loops and duplicate edges are dropped at construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

    Vertex vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    Vertex degree(Vertex v) const {
        return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
    }
    Vertex max_degree() const { return max_degree_; }

    bool has_edge(Vertex u, Vertex v) const;

    // External identifier of v in the file this graph was loaded from.
    // Programmatically built graphs use base 0, so label(v) == v.
    std::int64_t label(Vertex v) const { return std::int64_t(v) + index_base_; }
    std::int64_t index_base() const { return index_base_; }
    void set_index_base(std::int64_t base) { index_base_ = base; }

private:
    std::vector<std::uint64_t> offsets_{0};
    std::vector<Vertex> adj_;
    Vertex n_ = 0;
    std::uint64_t m_ = 0;
    Vertex max_degree_ = 0;
    std::int64_t index_base_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original; // new index -> original index, ascending
};

// Subgraph induced by `members` (a set, duplicates rejected). The i-th
// vertex of the result corresponds to the i-th smallest member.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

// seed plus every neighbor of a seed vertex, sorted ascending.
std::vector<Vertex> closed_neighborhood(const Graph& g, std::span<const Vertex> seed);

// Number of edges with both endpoints in `members`.
std::uint64_t count_edges_within(const Graph& g, std::span<const Vertex> members);

// True iff the induced edge count meets gamma * pair_count(|members|).
// Sets of size 0 or 1 are feasible by convention.
bool is_quasi_clique(const Graph& g, std::span<const Vertex> members, const Gamma& gamma);

} // namespace eqc
