#include "eqc/degeneracy.hpp"

#include <queue>

namespace eqc {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const Vertex n = g.vertex_count();
    DegeneracyOrdering out;
    out.order.reserve(n);
    out.position.assign(n, 0);
    out.core.assign(n, 0);

    std::vector<Vertex> residual(n);
    for (Vertex v = 0; v < n; ++v)
        residual[v] = g.degree(v);

    // Lazy min-heap over (residual degree, vertex id); stale entries are
    // skipped when popped. Simpler than bucket queues and fast enough here.
    using Entry = std::pair<Vertex, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (Vertex v = 0; v < n; ++v)
        heap.emplace(residual[v], v);

    std::vector<std::uint8_t> removed(n, 0);
    Vertex running_max = 0;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != residual[v]) continue;
        removed[v] = 1;
        running_max = std::max(running_max, d);
        out.core[v] = running_max;
        out.position[v] = static_cast<Vertex>(out.order.size());
        out.order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!removed[w]) {
                --residual[w];
                heap.emplace(residual[w], w);
            }
        }
    }
    out.degeneracy = running_max;
    return out;
}

} // namespace eqc
