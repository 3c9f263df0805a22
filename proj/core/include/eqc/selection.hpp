#pragma once

#include <limits>
#include <span>
#include <vector>

#include "eqc/graph.hpp"

namespace eqc {

// A vertex subset of a fixed graph with its internal edge count maintained
// incrementally, so feasibility checks after add/remove are O(deg).
class VertexSelection {
public:
    explicit VertexSelection(const Graph& g);
    VertexSelection(const Graph& g, std::span<const Vertex> members);

    void add(Vertex v);    // no-op counts as error: v must not be present
    void remove(Vertex v); // v must be present

    bool contains(Vertex v) const { return pos_[v] != kAbsent; }
    Vertex size() const { return static_cast<Vertex>(members_.size()); }
    bool empty() const { return members_.empty(); }

    std::uint64_t internal_edges() const { return internal_edges_; }
    std::uint64_t missing_edges() const {
        return pair_count(members_.size()) - internal_edges_;
    }
    bool feasible(const Gamma& gamma) const {
        return gamma.meets_threshold(internal_edges_, members_.size());
    }

    // Insertion order; use sorted_members() for canonical output.
    const std::vector<Vertex>& members() const { return members_; }
    std::vector<Vertex> sorted_members() const;

    const Graph& graph() const { return *g_; }

private:
    static constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();

    const Graph* g_;
    std::vector<Vertex> members_;
    std::vector<Vertex> pos_; // index into members_, kAbsent when outside
    std::uint64_t internal_edges_ = 0;
};

} // namespace eqc
