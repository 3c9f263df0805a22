#include "eqc/defective.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqc/coloring.hpp"
#include "eqc/degeneracy.hpp"

namespace eqc {

namespace {

// Branch and bound over (selected S, candidates C) on a reduced subgraph.
// Candidates are filtered against the missing-edge budget, two bounds prune
// (sorted cross-missing costs and a coloring bound), and the pivot is the
// candidate with the most neighbors in S, ties to the smaller index.
class DefectiveSearch {
public:
    DefectiveSearch(const Graph& h, std::span<const Vertex> to_original,
                    std::uint64_t k, BudgetTracker& tracker)
        : h_(h),
          to_original_(to_original),
          k_(k),
          tracker_(tracker),
          ord_(degeneracy_ordering(h)),
          coloring_(greedy_color(h, ord_)),
          in_s_(h.vertex_count(), 0),
          deg_s_(h.vertex_count(), 0),
          mark_(h.vertex_count(), 0),
          scratch_color_(h.vertex_count(), kNoColor) {}

    // best_* carry the incumbent in original vertex ids, updated in place.
    void run(std::uint64_t& best_size, std::vector<Vertex>& best_witness,
             std::uint64_t& nodes_out) {
        std::vector<Vertex> cand(h_.vertex_count());
        for (Vertex v = 0; v < h_.vertex_count(); ++v)
            cand[v] = v;
        best_size_ = &best_size;
        best_witness_ = &best_witness;
        branch(cand);
        nodes_out += nodes_;
    }

private:
    static constexpr Vertex kNoColor = static_cast<Vertex>(-1);

    void record(std::span<const Vertex> extra) {
        std::uint64_t sz = s_.size() + extra.size();
        if (sz <= *best_size_) return;
        *best_size_ = sz;
        auto& w = *best_witness_;
        w.clear();
        w.reserve(sz);
        for (Vertex v : s_)
            w.push_back(to_original_[v]);
        for (Vertex v : extra)
            w.push_back(to_original_[v]);
        std::sort(w.begin(), w.end());
    }

    // Missing edges inside cand plus between cand and S, on top of missing_.
    std::uint64_t union_extra_missing(const std::vector<Vertex>& cand) {
        std::uint64_t cross = 0;
        for (Vertex v : cand) {
            cross += s_.size() - deg_s_[v];
            mark_[v] = 1;
        }
        std::uint64_t inside_edges = 0;
        for (Vertex v : cand)
            for (Vertex w : h_.neighbors(v))
                if (mark_[w] && v < w) ++inside_edges;
        for (Vertex v : cand)
            mark_[v] = 0;
        return cross + pair_count(cand.size()) - inside_edges;
    }

    // How many candidates the per-vertex cross-missing costs alone allow.
    std::uint64_t cross_cost_bound(const std::vector<Vertex>& cand,
                                   std::uint64_t rem) {
        cost_scratch_.clear();
        for (Vertex v : cand)
            cost_scratch_.push_back(s_.size() - deg_s_[v]);
        std::sort(cost_scratch_.begin(), cost_scratch_.end());
        std::uint64_t total = 0, take = 0;
        for (std::uint64_t c : cost_scratch_) {
            if (total + c > rem) break;
            total += c;
            ++take;
        }
        return take;
    }

    // Coloring bound on the candidate subgraph. Small candidate sets get a
    // fresh greedy coloring; large ones reuse the subgraph-wide coloring
    // restricted to cand (cheaper, usually close enough there).
    std::uint64_t color_bound(const std::vector<Vertex>& cand, std::uint64_t rem) {
        class_scratch_.clear();
        if (cand.size() * 2 < h_.vertex_count()) {
            recolor_order_.assign(cand.begin(), cand.end());
            std::sort(recolor_order_.begin(), recolor_order_.end(),
                      [&](Vertex a, Vertex b) {
                          return ord_.position[a] > ord_.position[b];
                      });
            for (Vertex v : cand)
                mark_[v] = 1;
            for (Vertex v : recolor_order_) {
                used_colors_.assign(class_scratch_.size(), 0);
                for (Vertex w : h_.neighbors(v)) {
                    if (mark_[w] && scratch_color_[w] != kNoColor)
                        used_colors_[scratch_color_[w]] = 1;
                }
                Vertex color = 0;
                while (color < used_colors_.size() && used_colors_[color]) ++color;
                scratch_color_[v] = color;
                if (color == class_scratch_.size())
                    class_scratch_.push_back(0);
                ++class_scratch_[color];
            }
            for (Vertex v : cand) {
                mark_[v] = 0;
                scratch_color_[v] = kNoColor;
            }
        } else {
            for (Vertex v : cand) {
                Vertex c = coloring_.color_of[v];
                if (c >= class_scratch_.size()) class_scratch_.resize(c + 1, 0);
                ++class_scratch_[c];
            }
        }
        return defective_clique_ub(class_scratch_, rem);
    }

    void branch(const std::vector<Vertex>& cand_in) {
        if (!tracker_.tick()) return;
        ++nodes_;
        if (s_.size() > *best_size_)
            record({});

        // A candidate stays only while S plus the candidate fits the budget;
        // that sum never decreases deeper in the tree, so dropping is final.
        std::vector<Vertex> cand;
        cand.reserve(cand_in.size());
        for (Vertex v : cand_in)
            if (missing_ + s_.size() - deg_s_[v] <= k_)
                cand.push_back(v);
        if (cand.empty()) return;

        if (missing_ + union_extra_missing(cand) <= k_) {
            record(cand);
            return;
        }

        std::uint64_t rem = k_ - missing_;
        std::uint64_t head = cross_cost_bound(cand, rem);
        if (s_.size() + head <= *best_size_) return;
        if (s_.size() + color_bound(cand, rem) <= *best_size_) return;

        Vertex pivot = cand[0];
        for (Vertex v : cand)
            if (deg_s_[v] > deg_s_[pivot]) pivot = v;

        std::vector<Vertex> rest;
        rest.reserve(cand.size() - 1);
        for (Vertex v : cand)
            if (v != pivot) rest.push_back(v);

        // Exploring exclusion first while S is tiny diversifies the early
        // incumbents; once S has shape, committing to the pivot is stronger.
        bool exclude_first = s_.size() < 2;
        if (exclude_first) {
            branch(rest);
            if (tracker_.exhausted()) return;
            include(pivot);
            branch(rest);
            undo_include(pivot);
        } else {
            include(pivot);
            branch(rest);
            undo_include(pivot);
            if (tracker_.exhausted()) return;
            branch(rest);
        }
    }

    void include(Vertex v) {
        missing_ += s_.size() - deg_s_[v];
        s_.push_back(v);
        in_s_[v] = 1;
        for (Vertex w : h_.neighbors(v))
            ++deg_s_[w];
    }

    void undo_include(Vertex v) {
        for (Vertex w : h_.neighbors(v))
            --deg_s_[w];
        in_s_[v] = 0;
        s_.pop_back();
        missing_ -= s_.size() - deg_s_[v];
    }

    const Graph& h_;
    std::span<const Vertex> to_original_;
    const std::uint64_t k_;
    BudgetTracker& tracker_;
    DegeneracyOrdering ord_;
    ColoringSummary coloring_;

    std::vector<Vertex> s_;
    std::vector<std::uint8_t> in_s_;
    std::vector<Vertex> deg_s_;
    std::uint64_t missing_ = 0;
    std::uint64_t nodes_ = 0;

    std::vector<std::uint8_t> mark_;
    std::vector<Vertex> scratch_color_;
    std::vector<std::uint8_t> used_colors_;
    std::vector<Vertex> class_scratch_;
    std::vector<Vertex> recolor_order_;
    std::vector<std::uint64_t> cost_scratch_;

    std::uint64_t* best_size_ = nullptr;
    std::vector<Vertex>* best_witness_ = nullptr;
};

// Longest suffix of the removal order whose missing-edge count fits k.
// Suffix missing counts only grow as the suffix extends, so one scan does it.
std::vector<Vertex> suffix_start(const Graph& g, std::uint64_t k) {
    auto ord = degeneracy_ordering(g);
    const Vertex n = g.vertex_count();
    std::vector<std::uint8_t> in_suffix(n, 0);
    std::uint64_t missing = 0;
    std::uint64_t size = 0;
    std::vector<Vertex> suffix;
    for (Vertex i = n; i-- > 0;) {
        Vertex v = ord.order[i];
        std::uint64_t inside = 0;
        for (Vertex w : g.neighbors(v))
            if (in_suffix[w]) ++inside;
        if (missing + (size - inside) > k) break;
        missing += size - inside;
        ++size;
        in_suffix[v] = 1;
        suffix.push_back(v);
    }
    std::sort(suffix.begin(), suffix.end());
    return suffix;
}

void validate_seed(const Graph& g, std::uint64_t k, std::span<const Vertex> seed) {
    if (seed.empty()) return;
    std::vector<Vertex> sorted(seed.begin(), seed.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= g.vertex_count())
        throw std::invalid_argument("defective seed: vertex out of range");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("defective seed: duplicate vertex");
    std::uint64_t edges = count_edges_within(g, sorted);
    if (pair_count(sorted.size()) - edges > k)
        throw std::invalid_argument("defective seed: misses more than k edges");
}

} // namespace

std::vector<Vertex> reduce_candidates(const Graph& g, std::uint64_t lb,
                                      std::uint64_t k) {
    const Vertex n = g.vertex_count();
    std::vector<Vertex> keep;
    if (lb <= k) {
        keep.resize(n);
        for (Vertex v = 0; v < n; ++v)
            keep[v] = v;
        return keep;
    }
    const std::uint64_t threshold = lb - k;
    std::vector<std::uint64_t> deg(n);
    std::vector<std::uint8_t> gone(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < threshold) {
            gone[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!gone[w] && --deg[w] < threshold) {
                gone[w] = 1;
                queue.push_back(w);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return keep;
}

DefectiveResult max_defective_clique(const Graph& g, std::uint64_t k,
                                     std::span<const Vertex> seed,
                                     BudgetTracker& tracker) {
    validate_seed(g, k, seed);

    DefectiveResult res;
    const Vertex n = g.vertex_count();
    if (n == 0) return res;

    res.witness.assign(seed.begin(), seed.end());
    std::sort(res.witness.begin(), res.witness.end());
    res.size = res.witness.size();
    if (res.size == 0) {
        res.witness = {0};
        res.size = 1;
    }

    std::vector<Vertex> suffix = suffix_start(g, k);
    if (suffix.size() > res.size) {
        res.size = suffix.size();
        res.witness = std::move(suffix);
    }
    if (res.size == n) return res;

    std::vector<Vertex> keep = reduce_candidates(g, res.size, k);
    if (keep.size() <= res.size) return res;

    InducedSubgraph sub = induced_subgraph(g, keep);
    if (pair_count(keep.size()) - sub.graph.edge_count() <= k) {
        // Survivors as a whole fit the budget; nothing larger can exist
        // because any bigger solution would need a peeled vertex.
        res.size = keep.size();
        res.witness = std::move(keep);
        return res;
    }

    DefectiveSearch search(sub.graph, sub.to_original, k, tracker);
    search.run(res.size, res.witness, res.nodes);
    res.optimal = !tracker.exhausted();
    return res;
}

DefectiveResult max_defective_clique(const Graph& g, std::uint64_t k,
                                     std::span<const Vertex> seed,
                                     const SearchBudget& budget) {
    BudgetTracker tracker(budget);
    return max_defective_clique(g, k, seed, tracker);
}

} // namespace eqc
