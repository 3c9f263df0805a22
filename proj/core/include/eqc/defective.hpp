#pragma once

#include <span>
#include <vector>

#include "eqc/budget.hpp"
#include "eqc/graph.hpp"

namespace eqc {

// A k-defective clique: vertex set whose induced subgraph misses at most k
// edges. Hereditary (any subset still qualifies), unlike the density
// constraint this solver is used to answer questions about.
struct DefectiveResult {
    std::uint64_t size = 0;
    std::vector<Vertex> witness; // sorted ascending
    bool optimal = true;         // false iff the budget ran out first
    std::uint64_t nodes = 0;     // branch nodes explored
};

// Vertices that can belong to some k-defective clique of size >= lb+1.
// A member of a size-s solution has at least s-1-k neighbors inside it, so
// degree < lb-k disqualifies; applied iteratively to a fixed point.
std::vector<Vertex> reduce_candidates(const Graph& g, std::uint64_t lb,
                                      std::uint64_t k);

// Exact maximum k-defective clique via branch and bound. `seed` is an
// optional known k-defective clique used as the starting incumbent (it is
// validated; pass {} when none is known). On budget exhaustion the best
// incumbent found is returned with optimal=false, never silently.
DefectiveResult max_defective_clique(const Graph& g, std::uint64_t k,
                                     std::span<const Vertex> seed,
                                     BudgetTracker& tracker);

DefectiveResult max_defective_clique(const Graph& g, std::uint64_t k,
                                     std::span<const Vertex> seed = {},
                                     const SearchBudget& budget = {});

} // namespace eqc
