#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "eqc/graph.hpp"
#include "eqc/selection.hpp"

namespace eqc {

// Counter-based generator (splitmix64 finisher over seed + counter). Each
// tie-break consumes exactly one draw, so runs with the same seed replay
// identically regardless of platform or container iteration order.
class TieBreakRng {
public:
    explicit TieBreakRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform pick from [0, bound); bound >= 1.
    std::uint64_t pick(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Working state of the add/remove local search: a partition of V into the
// current set S and the candidate pool C, per-vertex degrees into S, and the
// long-term scores steering tie-breaks.
class ScoreState {
public:
    explicit ScoreState(const Graph& g);

    // S = {seed}, C = everything else, all scores back to 0.
    void reset_to_seed(Vertex seed);

    const Graph& graph() const { return *g_; }
    bool in_selected(Vertex v) const { return in_selected_[v] != 0; }
    Vertex deg_into_selected(Vertex v) const { return deg_s_[v]; }
    std::int64_t score(Vertex v) const { return score_[v]; }

    const std::vector<Vertex>& selected() const { return selected_; }
    const std::vector<Vertex>& candidates() const { return candidates_; }
    std::uint64_t internal_edges() const { return internal_edges_; }
    std::uint64_t missing_edges() const {
        return pair_count(selected_.size()) - internal_edges_;
    }

    void move_to_selected(Vertex v);  // v must be a candidate; score reset
    void move_to_candidates(Vertex v); // v must be selected; score reset
    void add_score(Vertex v, std::int64_t delta) { score_[v] += delta; }

private:
    static constexpr Vertex kAbsent = static_cast<Vertex>(-1);

    const Graph* g_;
    std::vector<std::int64_t> score_;
    std::vector<std::uint8_t> in_selected_;
    std::vector<Vertex> deg_s_;
    std::vector<Vertex> selected_;
    std::vector<Vertex> candidates_;
    std::vector<Vertex> pos_; // position within whichever list holds v
    std::uint64_t internal_edges_ = 0;
};

// One score refresh after a full add/add/remove round: selected vertices
// earn their pull toward C (degree into C minus the graph's max degree,
// usually negative), candidates earn their pull toward S (degree into S).
void update_scores(ScoreState& state);

// Moves the best candidate into S: max degree into S, then max score, then
// a uniform draw. Returns the vertex, or nullopt when C is empty.
std::optional<Vertex> add_best_vertex(ScoreState& state, TieBreakRng& rng);

// Moves the worst selected vertex out: min degree into S, then min score,
// then a uniform draw. Throws std::logic_error when S is empty.
Vertex remove_worst_vertex(ScoreState& state, TieBreakRng& rng);

// Longest suffix of the degeneracy removal order that meets the density
// threshold. Non-empty for any non-empty graph (a single vertex qualifies).
VertexSelection suffix_heuristic(const Graph& g, const Gamma& gamma);

// suffix_heuristic on g itself and on every closed neighborhood, keeping
// the largest result (strictly larger replaces, so earlier wins ties).
VertexSelection neighborhood_suffix_heuristic(const Graph& g, const Gamma& gamma);

// Score-guided local search started from each seed vertex in turn: grow by
// two, shed one, re-score, while the missing-edge budget for a next-size
// solution holds. Never returns anything smaller than the seed itself.
VertexSelection local_search(const Graph& g, const Gamma& gamma,
                             std::span<const Vertex> seed, TieBreakRng& rng);

// Alternate local search with restriction to the closed neighborhood of the
// current solution until the size stops improving. The restriction keeps the
// working graph small; results are mapped back to g's vertex ids.
VertexSelection expand_solution(const Graph& g, const Gamma& gamma,
                                std::span<const Vertex> seed, TieBreakRng& rng);

} // namespace eqc
