#pragma once

#include <map>
#include <span>
#include <vector>

#include "eqc/budget.hpp"
#include "eqc/defective.hpp"
#include "eqc/gamma.hpp"
#include "eqc/graph.hpp"

namespace eqc {

enum class ProbePhase { doubling, halving, top_down };

// One probe of the defective-clique solver on behalf of a framework.
struct ProbeEvent {
    ProbePhase phase;
    std::uint64_t probed_size;   // the s the framework asked about
    std::uint64_t k;             // missing-edge budget derived from s
    std::uint64_t returned_size; // exact solver (or cached) answer for k
    std::uint64_t expanded_size; // after heuristic expansion; == returned_size without it
    bool memo_hit = false;
    double wall_s = 0.0;
};

struct SearchTrace {
    std::vector<ProbeEvent> events;

    std::uint64_t check_calls() const; // doubling + halving probes only
    std::uint64_t memo_hits() const;
};

struct SolveResult {
    std::uint64_t optimal_size = 0;
    std::vector<Vertex> witness; // sorted; feasible for the input gamma
    SearchTrace trace;
    bool solved = true;   // false iff the budget ran out; size/witness then
                          // hold the best proven-feasible solution found
    double heuristic_s = 0.0;
    double search_s = 0.0;
};

// Exact defective-clique answers keyed by budget k. Distinct target sizes
// often map to the same k (collisions grow with gamma), so frameworks reuse
// past solves. Only exact (optimal) results may be stored.
class DefectiveCache {
public:
    const DefectiveResult* find(std::uint64_t k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? nullptr : &it->second;
    }
    void store(std::uint64_t k, const DefectiveResult& r);
    std::size_t size() const { return entries_.size(); }
    const std::map<std::uint64_t, DefectiveResult>& entries() const {
        return entries_;
    }

private:
    std::map<std::uint64_t, DefectiveResult> entries_;
};

struct ProbeOutcome {
    bool feasible = false;  // a feasible set of size >= s exists
    DefectiveResult result; // the underlying exact answer (check .optimal)
};

// Does g contain a feasible set of at least s vertices? Answered by one
// exact defective-clique solve with budget max_missing(s).
ProbeOutcome probe_size(const Graph& g, const Gamma& gamma, std::uint64_t s,
                        const SearchBudget& budget = {});

// Upper bound on the optimum size: edge-count bound first, then repeated
// coloring-bound tightening until the derived budget stops shrinking.
// Requires at least one edge.
std::uint64_t size_upper_bound(const Graph& g, const Gamma& gamma);

// Shrinks an upper bound to the optimum: s0 = size_upper_bound, then
// s_{i+1} = exact solve at budget max_missing(s_i) until the budget maps to
// itself. No lower-bound heuristics involved.
SolveResult solve_top_down(const Graph& g, const Gamma& gamma,
                           const SearchBudget& budget = {});

// Grows a lower bound: doubling probes at lb+1, lb+2, lb+4, ... then binary
// search on the bracketed interval. `initial` is an optional feasible
// solution whose size seeds lb (validated; pass {} to start from 1).
SolveResult solve_bottom_up(const Graph& g, const Gamma& gamma,
                            std::span<const Vertex> initial = {},
                            const SearchBudget& budget = {});

// The full pipeline: heuristic ladder for the initial lower bound, then
// bottom-up probing where each solve is cached by its budget k (cache passed
// in; nullptr disables reuse) and each exact witness is heuristically
// expanded to pull the lower bound further.
SolveResult solve_memoized(const Graph& g, const Gamma& gamma,
                           std::uint64_t rng_seed, const SearchBudget& budget,
                           DefectiveCache* cache);

// Normal entry point: memoization on, internal cache.
SolveResult solve_memoized(const Graph& g, const Gamma& gamma,
                           std::uint64_t rng_seed = 0,
                           const SearchBudget& budget = {});

} // namespace eqc
