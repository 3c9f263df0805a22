#include "eqc/coloring.hpp"

#include <algorithm>

namespace eqc {

ColoringSummary greedy_color(const Graph& g, const DegeneracyOrdering& ord) {
    const Vertex n = g.vertex_count();
    constexpr Vertex kUncolored = static_cast<Vertex>(-1);
    ColoringSummary out;
    out.color_of.assign(n, kUncolored);

    std::vector<std::uint8_t> used; // colors taken by already-colored neighbors
    for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
        Vertex v = *it;
        for (Vertex w : g.neighbors(v)) {
            Vertex c = out.color_of[w];
            if (c != kUncolored) {
                if (c >= used.size()) used.resize(c + 1, 0);
                used[c] = 1;
            }
        }
        Vertex color = 0;
        while (color < used.size() && used[color]) ++color;
        out.color_of[v] = color;
        if (color >= out.class_size.size()) out.class_size.resize(color + 1, 0);
        ++out.class_size[color];
        std::fill(used.begin(), used.end(), 0);
    }
    return out;
}

std::uint64_t defective_clique_ub(std::span<const Vertex> class_size,
                                  std::uint64_t budget) {
    std::uint64_t total = 0;
    Vertex max_class = 0;
    for (Vertex c : class_size) {
        total += c;
        max_class = std::max(max_class, c);
    }
    if (total == 0) return 0;

    // cost(l): missing edges forced by taking min(l, size) vertices from
    // every class; each class's picks are pairwise non-adjacent.
    auto cost = [&](std::uint64_t l) {
        std::uint64_t sum = 0;
        for (Vertex c : class_size)
            sum += pair_count(std::min<std::uint64_t>(l, c));
        return sum;
    };

    // Largest per-class cap whose full rounds fit the budget. l=1 is always
    // affordable (singletons cost nothing), so lo ends at >= 1.
    std::uint64_t lo = 1, hi = max_class;
    while (lo < hi) {
        std::uint64_t mid = (lo + hi + 1) / 2;
        if (cost(mid) <= budget)
            lo = mid;
        else
            hi = mid - 1;
    }
    std::uint64_t l = lo;

    std::uint64_t ub = 0;
    std::uint64_t spent = 0;
    for (Vertex c : class_size) {
        std::uint64_t take = std::min<std::uint64_t>(l, c);
        ub += take;
        spent += pair_count(take);
    }
    // One more vertex from a class of size > l pairs with l selected
    // classmates, so each further pick costs exactly l missing edges.
    ub += (budget - spent) / l;
    return std::min(ub, total);
}

std::uint64_t defective_clique_ub(const Graph& g, std::uint64_t budget) {
    auto coloring = greedy_color(g, degeneracy_ordering(g));
    return defective_clique_ub(coloring.class_size, budget);
}

} // namespace eqc
