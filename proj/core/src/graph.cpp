#include "eqc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
    std::vector<std::pair<Vertex, Vertex>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        norm.emplace_back(u, v);
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.n_ = n;
    g.m_ = norm.size();
    std::vector<Vertex> deg(n, 0);
    for (auto [u, v] : norm) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : norm) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // Insertion order of sorted (u,v) pairs leaves each list sorted already,
    // except lists mixing "as smaller endpoint" and "as larger endpoint"
    // entries, so sort per list to be safe.
    for (Vertex v = 0; v < n; ++v) {
        auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        g.max_degree_ = std::max(g.max_degree_, deg[v]);
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    // Probe the shorter list.
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
    std::vector<Vertex> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("induced_subgraph: duplicate member");
    if (!sorted.empty() && sorted.back() >= g.vertex_count())
        throw std::out_of_range("induced_subgraph: member out of range");

    const Vertex nsub = static_cast<Vertex>(sorted.size());
    constexpr Vertex kAbsent = static_cast<Vertex>(-1);
    std::vector<Vertex> to_sub(g.vertex_count(), kAbsent);
    for (Vertex i = 0; i < nsub; ++i)
        to_sub[sorted[i]] = i;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < nsub; ++i) {
        for (Vertex w : g.neighbors(sorted[i])) {
            Vertex j = to_sub[w];
            if (j != kAbsent && i < j)
                edges.emplace_back(i, j);
        }
    }
    InducedSubgraph out;
    out.graph = Graph::from_edges(nsub, edges);
    out.to_original = std::move(sorted);
    return out;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, std::span<const Vertex> seed) {
    std::vector<std::uint8_t> mark(g.vertex_count(), 0);
    for (Vertex v : seed) {
        if (v >= g.vertex_count())
            throw std::out_of_range("closed_neighborhood: vertex out of range");
        mark[v] = 1;
        for (Vertex w : g.neighbors(v))
            mark[w] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

std::uint64_t count_edges_within(const Graph& g, std::span<const Vertex> members) {
    std::vector<std::uint8_t> mark(g.vertex_count(), 0);
    for (Vertex v : members) {
        if (v >= g.vertex_count())
            throw std::out_of_range("count_edges_within: vertex out of range");
        mark[v] = 1;
    }
    std::uint64_t cnt = 0;
    for (Vertex v : members)
        for (Vertex w : g.neighbors(v))
            if (mark[w] && v < w) ++cnt;
    return cnt;
}

bool is_quasi_clique(const Graph& g, std::span<const Vertex> members, const Gamma& gamma) {
    if (members.size() < 2) return true;
    return gamma.meets_threshold(count_edges_within(g, members), members.size());
}

} // namespace eqc
