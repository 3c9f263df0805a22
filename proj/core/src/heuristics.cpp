#include "eqc/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqc/degeneracy.hpp"

namespace eqc {

ScoreState::ScoreState(const Graph& g)
    : g_(&g),
      score_(g.vertex_count(), 0),
      in_selected_(g.vertex_count(), 0),
      deg_s_(g.vertex_count(), 0),
      pos_(g.vertex_count(), kAbsent) {
    candidates_.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        pos_[v] = v;
        candidates_.push_back(v);
    }
}

void ScoreState::reset_to_seed(Vertex seed) {
    const Vertex n = g_->vertex_count();
    if (seed >= n)
        throw std::out_of_range("ScoreState::reset_to_seed: vertex out of range");
    std::fill(score_.begin(), score_.end(), 0);
    std::fill(in_selected_.begin(), in_selected_.end(), 0);
    std::fill(deg_s_.begin(), deg_s_.end(), 0);
    selected_.clear();
    candidates_.clear();
    internal_edges_ = 0;

    in_selected_[seed] = 1;
    selected_.push_back(seed);
    pos_[seed] = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (v == seed) continue;
        pos_[v] = static_cast<Vertex>(candidates_.size());
        candidates_.push_back(v);
    }
    for (Vertex w : g_->neighbors(seed))
        deg_s_[w] = 1;
}

void ScoreState::move_to_selected(Vertex v) {
    Vertex at = pos_[v];
    candidates_[at] = candidates_.back();
    pos_[candidates_[at]] = at;
    candidates_.pop_back();

    internal_edges_ += deg_s_[v];
    in_selected_[v] = 1;
    pos_[v] = static_cast<Vertex>(selected_.size());
    selected_.push_back(v);
    for (Vertex w : g_->neighbors(v))
        ++deg_s_[w];
    score_[v] = 0;
}

void ScoreState::move_to_candidates(Vertex v) {
    Vertex at = pos_[v];
    selected_[at] = selected_.back();
    pos_[selected_[at]] = at;
    selected_.pop_back();

    for (Vertex w : g_->neighbors(v))
        --deg_s_[w];
    internal_edges_ -= deg_s_[v];
    in_selected_[v] = 0;
    pos_[v] = static_cast<Vertex>(candidates_.size());
    candidates_.push_back(v);
    score_[v] = 0;
}

void update_scores(ScoreState& state) {
    const Graph& g = state.graph();
    const std::int64_t max_deg = g.max_degree();
    for (Vertex v : state.selected()) {
        std::int64_t deg_c = std::int64_t(g.degree(v)) - state.deg_into_selected(v);
        state.add_score(v, deg_c - max_deg);
    }
    for (Vertex v : state.candidates())
        state.add_score(v, state.deg_into_selected(v));
}

namespace {

// Ties surviving both keys are resolved by one rng draw over the tied
// vertices in ascending id order, so the outcome does not depend on the
// internal layout of the candidate list.
template <typename Better>
Vertex pick_extreme(const std::vector<Vertex>& pool, TieBreakRng& rng,
                    Better better) {
    Vertex champ = pool[0];
    for (Vertex v : pool)
        if (better(v, champ)) champ = v;
    std::vector<Vertex> tied;
    for (Vertex v : pool)
        if (!better(v, champ) && !better(champ, v)) tied.push_back(v);
    std::sort(tied.begin(), tied.end());
    return tied[rng.pick(tied.size())];
}

} // namespace

std::optional<Vertex> add_best_vertex(ScoreState& state, TieBreakRng& rng) {
    if (state.candidates().empty()) return std::nullopt;
    Vertex u = pick_extreme(state.candidates(), rng, [&](Vertex a, Vertex b) {
        if (state.deg_into_selected(a) != state.deg_into_selected(b))
            return state.deg_into_selected(a) > state.deg_into_selected(b);
        return state.score(a) > state.score(b);
    });
    state.move_to_selected(u);
    return u;
}

Vertex remove_worst_vertex(ScoreState& state, TieBreakRng& rng) {
    if (state.selected().empty())
        throw std::logic_error("remove_worst_vertex: selection is empty");
    Vertex u = pick_extreme(state.selected(), rng, [&](Vertex a, Vertex b) {
        if (state.deg_into_selected(a) != state.deg_into_selected(b))
            return state.deg_into_selected(a) < state.deg_into_selected(b);
        return state.score(a) < state.score(b);
    });
    state.move_to_candidates(u);
    return u;
}

VertexSelection suffix_heuristic(const Graph& g, const Gamma& gamma) {
    const Vertex n = g.vertex_count();
    VertexSelection best(g);
    if (n == 0) return best;

    auto ord = degeneracy_ordering(g);
    std::vector<std::uint8_t> in_suffix(n, 0);
    std::uint64_t edges = 0;
    std::uint64_t best_len = 0;
    // Density is not monotone along the suffix, so scan all of it.
    for (Vertex i = n; i-- > 0;) {
        Vertex v = ord.order[i];
        for (Vertex w : g.neighbors(v))
            if (in_suffix[w]) ++edges;
        in_suffix[v] = 1;
        std::uint64_t len = n - i;
        if (gamma.meets_threshold(edges, len))
            best_len = len;
    }
    for (std::uint64_t i = n - best_len; i < n; ++i)
        best.add(ord.order[i]);
    return best;
}

VertexSelection neighborhood_suffix_heuristic(const Graph& g, const Gamma& gamma) {
    VertexSelection best = suffix_heuristic(g, gamma);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (std::uint64_t(g.degree(u)) + 1 <= best.size())
            continue; // neighborhood too small to beat the incumbent
        Vertex hood[1] = {u};
        auto sub = induced_subgraph(g, closed_neighborhood(g, hood));
        VertexSelection local = suffix_heuristic(sub.graph, gamma);
        if (local.size() > best.size()) {
            VertexSelection mapped(g);
            for (Vertex v : local.members())
                mapped.add(sub.to_original[v]);
            best = std::move(mapped);
        }
    }
    return best;
}

VertexSelection local_search(const Graph& g, const Gamma& gamma,
                             std::span<const Vertex> seed, TieBreakRng& rng) {
    VertexSelection best(g, seed);
    if (!best.feasible(gamma))
        throw std::invalid_argument("local_search: seed is not a feasible solution");
    if (best.empty()) return best;

    std::vector<Vertex> seeds(seed.begin(), seed.end());
    std::sort(seeds.begin(), seeds.end());

    std::uint64_t budget = gamma.max_missing(best.size() + 1);
    ScoreState state(g);
    auto harvest = [&] {
        if (state.selected().size() <= best.size()) return;
        VertexSelection found(g, state.selected());
        if (!found.feasible(gamma)) return;
        best = std::move(found);
        budget = gamma.max_missing(best.size() + 1);
    };
    for (Vertex u : seeds) {
        state.reset_to_seed(u);
        std::uint64_t iterations = 0;
        // Keep churning while S still fits the missing-edge budget of a
        // next-size solution; the cap bounds stagnating walks.
        while (state.missing_edges() <= budget &&
               iterations < 4ull * best.size() * best.size()) {
            ++iterations;
            harvest();
            if (!add_best_vertex(state, rng)) break;
            if (!add_best_vertex(state, rng)) break;
            remove_worst_vertex(state, rng);
            update_scores(state);
        }
        // An add may have grown S right before the walk stopped; keep that
        // improvement instead of discarding the tail state.
        harvest();
    }
    return best;
}

VertexSelection expand_solution(const Graph& g, const Gamma& gamma,
                                std::span<const Vertex> seed, TieBreakRng& rng) {
    if (!is_quasi_clique(g, seed, gamma))
        throw std::invalid_argument("expand_solution: seed is not a feasible solution");
    std::vector<Vertex> current(seed.begin(), seed.end());
    std::sort(current.begin(), current.end());

    while (!current.empty()) {
        auto sub = induced_subgraph(g, closed_neighborhood(g, current));
        std::vector<Vertex> local_seed(current.size());
        for (std::size_t i = 0; i < current.size(); ++i) {
            auto it = std::lower_bound(sub.to_original.begin(),
                                       sub.to_original.end(), current[i]);
            local_seed[i] = static_cast<Vertex>(it - sub.to_original.begin());
        }
        VertexSelection improved = local_search(sub.graph, gamma, local_seed, rng);
        if (improved.size() <= current.size()) break;
        std::vector<Vertex> mapped;
        mapped.reserve(improved.size());
        for (Vertex v : improved.members())
            mapped.push_back(sub.to_original[v]);
        std::sort(mapped.begin(), mapped.end());
        current = std::move(mapped);
    }
    return VertexSelection(g, current);
}

} // namespace eqc
