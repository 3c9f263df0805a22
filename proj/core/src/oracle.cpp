#include "eqc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace eqc {

namespace {

// edges[S] for every subset mask S, via edges[S] = edges[S minus lowest
// vertex] + |N(lowest vertex) ∩ rest|. uint16 per entry: enough for
// C(26,2) = 325 at the hard size cap.
std::vector<std::uint16_t> subset_edge_table(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::uint32_t> adj_mask(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            adj_mask[v] |= (1u << w);

    std::vector<std::uint16_t> edges(std::size_t(1) << n, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint32_t low = mask & (-mask);
        std::uint32_t rest = mask ^ low;
        Vertex v = static_cast<Vertex>(std::countr_zero(mask));
        edges[mask] = static_cast<std::uint16_t>(
            edges[rest] + std::popcount(adj_mask[v] & rest));
    }
    return edges;
}

void check_limit(const Graph& g, OracleLimit limit, const char* who) {
    // 26 is a hard ceiling regardless of the caller's limit: the table alone
    // is already 128MB there and masks must stay within 32 bits.
    Vertex cap = std::min<Vertex>(limit.max_n, 26);
    if (g.vertex_count() > cap)
        throw std::invalid_argument(
            std::string(who) + ": refusing graph with " +
            std::to_string(g.vertex_count()) + " vertices (limit " +
            std::to_string(cap) + "); the subset table is 2^n entries");
}

// Among equal-size subsets, the lexicographically smaller sorted vertex
// list is the one owning the lowest differing bit.
bool lex_smaller(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & (-diff))) != 0;
}

template <typename Feasible>
OracleResult best_subset(const Graph& g, Feasible&& feasible) {
    const Vertex n = g.vertex_count();
    OracleResult out;
    if (n == 0) return out;

    auto edges = subset_edge_table(g);
    const std::uint32_t full = (1u << n) - 1;

    std::uint32_t best_mask = 0;
    std::uint64_t best_size = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint64_t size = std::popcount(mask);
        if (size < best_size) continue;
        if (!feasible(edges[mask], size)) continue;
        if (size > best_size ||
            (size == best_size && lex_smaller(mask, best_mask))) {
            best_size = size;
            best_mask = mask;
        }
    }
    out.size = best_size;
    for (Vertex v = 0; v < n; ++v)
        if (best_mask & (1u << v)) out.witness.push_back(v);
    return out;
}

} // namespace

OracleResult brute_max_quasi_clique(const Graph& g, const Gamma& gamma,
                                    OracleLimit limit) {
    check_limit(g, limit, "brute_max_quasi_clique");
    return best_subset(g, [&](std::uint64_t e, std::uint64_t size) {
        return gamma.meets_threshold(e, size);
    });
}

OracleResult brute_max_defective_clique(const Graph& g, std::uint64_t k,
                                        OracleLimit limit) {
    check_limit(g, limit, "brute_max_defective_clique");
    return best_subset(g, [&](std::uint64_t e, std::uint64_t size) {
        return pair_count(size) - e <= k;
    });
}

} // namespace eqc
