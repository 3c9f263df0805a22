#include "eqc/frameworks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "eqc/coloring.hpp"
#include "eqc/degeneracy.hpp"
#include "eqc/heuristics.hpp"

namespace eqc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Results for graphs the iteration never needs to touch.
bool trivial_case(const Graph& g, SolveResult& out) {
    if (g.vertex_count() == 0) {
        out.optimal_size = 0;
        return true;
    }
    if (g.edge_count() == 0) {
        // Any pair misses its only edge, so singletons are the best.
        out.optimal_size = 1;
        out.witness = {0};
        return true;
    }
    return false;
}

// Current best feasible solution, kept with its missing-edge count so probe
// seeding can cheaply test whether it is valid for a smaller budget.
struct Incumbent {
    std::vector<Vertex> witness; // sorted
    u64 missing = 0;

    u64 size() const { return witness.size(); }

    void replace(const Graph& g, std::vector<Vertex> w) {
        std::sort(w.begin(), w.end());
        missing = pair_count(w.size()) - count_edges_within(g, w);
        witness = std::move(w);
    }

    std::span<const Vertex> seed_for(u64 k) const {
        if (!witness.empty() && missing <= k) return witness;
        return {};
    }
};

SolveResult finish(SolveResult res, const Incumbent& best, bool solved) {
    res.optimal_size = best.size();
    res.witness = best.witness;
    res.solved = solved;
    return res;
}

} // namespace

std::uint64_t SearchTrace::check_calls() const {
    u64 c = 0;
    for (const auto& e : events)
        if (e.phase != ProbePhase::top_down) ++c;
    return c;
}

std::uint64_t SearchTrace::memo_hits() const {
    u64 c = 0;
    for (const auto& e : events)
        if (e.memo_hit) ++c;
    return c;
}

void DefectiveCache::store(std::uint64_t k, const DefectiveResult& r) {
    if (!r.optimal)
        throw std::invalid_argument("DefectiveCache: only exact results may be cached");
    entries_.insert_or_assign(k, r);
}

ProbeOutcome probe_size(const Graph& g, const Gamma& gamma, std::uint64_t s,
                        const SearchBudget& budget) {
    if (s == 0)
        throw std::invalid_argument("probe_size: s must be positive");
    ProbeOutcome out;
    out.result = max_defective_clique(g, gamma.max_missing(s), {}, budget);
    out.feasible = out.result.optimal && out.result.size >= s;
    return out;
}

std::uint64_t size_upper_bound(const Graph& g, const Gamma& gamma) {
    const u64 m = g.edge_count();
    if (m == 0)
        throw std::invalid_argument("size_upper_bound: graph has no edges");

    // Edge-count bound: a feasible set of size s needs gamma*C(s,2) <= m.
    // Start from the real-valued root and settle the integer boundary
    // exactly; the 2^30 ceiling only guards intermediate overflow and is
    // far above any loadable vertex count.
    constexpr u64 kCap = u64(1) << 30;
    auto fits = [&](u64 s) {
        return u128(gamma.num()) * s * (s - 1) <= u128(2) * m * gamma.den();
    };
    double est =
        (1.0 + std::sqrt(1.0 + 8.0 * double(m) / gamma.value())) / 2.0;
    u64 ub = std::min<u64>(kCap, est < 2.0 ? 2 : u64(est));
    while (ub + 1 <= kCap && fits(ub + 1)) ++ub;
    while (ub > 2 && !fits(ub)) --ub;

    auto coloring = greedy_color(g, degeneracy_ordering(g));
    u64 k = gamma.max_missing(ub);
    for (;;) {
        ub = defective_clique_ub(coloring.class_size, k);
        if (gamma.max_missing(ub) >= k) break;
        k = gamma.max_missing(ub);
    }
    return ub;
}

SolveResult solve_top_down(const Graph& g, const Gamma& gamma,
                           const SearchBudget& budget) {
    SolveResult res;
    if (trivial_case(g, res)) return res;

    BudgetTracker tracker(budget);
    auto t_search = std::chrono::steady_clock::now();
    u64 s_prev = size_upper_bound(g, gamma);
    u64 k = gamma.max_missing(s_prev);
    for (;;) {
        auto t0 = std::chrono::steady_clock::now();
        DefectiveResult sol = max_defective_clique(g, k, {}, tracker);
        res.trace.events.push_back({ProbePhase::top_down, s_prev, k, sol.size,
                                    sol.size, false, seconds_since(t0)});
        if (!sol.optimal) {
            // Salvage a feasible lower bound if the partial witness is one.
            Incumbent best;
            if (is_quasi_clique(g, sol.witness, gamma))
                best.replace(g, std::move(sol.witness));
            else
                best.replace(g, {0});
            res.search_s = seconds_since(t_search);
            return finish(std::move(res), best, false);
        }
        if (k == gamma.max_missing(sol.size)) {
            // The budget reproduces itself: sol is feasible and no larger
            // set can be, so this is the optimum.
            res.optimal_size = sol.size;
            res.witness = std::move(sol.witness);
            std::sort(res.witness.begin(), res.witness.end());
            res.search_s = seconds_since(t_search);
            return res;
        }
        s_prev = sol.size;
        k = gamma.max_missing(sol.size);
    }
}

SolveResult solve_bottom_up(const Graph& g, const Gamma& gamma,
                            std::span<const Vertex> initial,
                            const SearchBudget& budget) {
    SolveResult res;
    if (trivial_case(g, res)) return res;
    if (!is_quasi_clique(g, initial, gamma))
        throw std::invalid_argument("solve_bottom_up: initial solution is infeasible");

    Incumbent best;
    if (initial.empty())
        best.replace(g, {0});
    else
        best.replace(g, {initial.begin(), initial.end()});

    BudgetTracker tracker(budget);
    auto t_search = std::chrono::steady_clock::now();
    const u64 lb = best.size();
    const u64 ub = g.vertex_count();

    // Probe: can the graph reach size s? Updates the incumbent on success.
    // Returns no value when the budget dies mid-solve.
    auto probe = [&](u64 s, ProbePhase phase) -> std::optional<bool> {
        u64 k = gamma.max_missing(s);
        auto t0 = std::chrono::steady_clock::now();
        DefectiveResult sol = max_defective_clique(g, k, best.seed_for(k), tracker);
        res.trace.events.push_back({phase, s, k, sol.size, sol.size, false,
                                    seconds_since(t0)});
        if (!sol.optimal) return std::nullopt;
        if (sol.size >= s && sol.size > best.size())
            best.replace(g, std::move(sol.witness));
        return sol.size >= s;
    };

    u64 gap = 1;
    u64 lb_new = lb;
    while (lb + gap <= ub) {
        auto ok = probe(lb + gap, ProbePhase::doubling);
        if (!ok) {
            res.search_s = seconds_since(t_search);
            return finish(std::move(res), best, false);
        }
        if (!*ok) break;
        lb_new = lb + gap;
        gap *= 2;
    }
    u64 ub_new = std::min(lb + gap - 1, ub);

    while (lb_new != ub_new) {
        u64 mid = (lb_new + ub_new + 1) / 2;
        auto ok = probe(mid, ProbePhase::halving);
        if (!ok) {
            res.search_s = seconds_since(t_search);
            return finish(std::move(res), best, false);
        }
        if (*ok)
            lb_new = mid;
        else
            ub_new = mid - 1;
    }

    res.search_s = seconds_since(t_search);
    return finish(std::move(res), best, lb_new == best.size());
}

SolveResult solve_memoized(const Graph& g, const Gamma& gamma,
                           std::uint64_t rng_seed, const SearchBudget& budget,
                           DefectiveCache* cache) {
    SolveResult res;
    if (trivial_case(g, res)) return res;

    TieBreakRng rng(rng_seed);
    auto t_heu = std::chrono::steady_clock::now();
    VertexSelection start = neighborhood_suffix_heuristic(g, gamma);
    VertexSelection grown =
        expand_solution(g, gamma, start.sorted_members(), rng);
    res.heuristic_s = seconds_since(t_heu);

    Incumbent best;
    best.replace(g, grown.sorted_members());
    const u64 lb = best.size();
    const u64 ub = g.vertex_count();
    if (lb == ub)
        return finish(std::move(res), best, true);

    BudgetTracker tracker(budget);
    auto t_search = std::chrono::steady_clock::now();

    // One bottom-up probe at target size s: exact answer for k (cached when
    // possible), then heuristic expansion of the witness, which both settles
    // the probe and often drags the incumbent past s. Returns the expanded
    // size, or no value when the budget dies.
    auto memo_probe = [&](u64 s, ProbePhase phase) -> std::optional<u64> {
        u64 k = gamma.max_missing(s);
        auto t0 = std::chrono::steady_clock::now();
        DefectiveResult sol;
        bool hit = false;
        if (cache) {
            if (const DefectiveResult* found = cache->find(k)) {
                sol = *found;
                hit = true;
            }
        }
        if (!hit) {
            sol = max_defective_clique(g, k, best.seed_for(k), tracker);
            if (!sol.optimal) {
                res.trace.events.push_back({phase, s, k, sol.size, sol.size,
                                            false, seconds_since(t0)});
                return std::nullopt;
            }
            if (cache) cache->store(k, sol);
        }
        u64 expanded = sol.size;
        // The raw witness doubles as a heuristic seed whenever it meets the
        // density threshold itself (always true when sol.size >= s).
        if (is_quasi_clique(g, sol.witness, gamma)) {
            VertexSelection wider = expand_solution(g, gamma, sol.witness, rng);
            expanded = wider.size();
            if (expanded > best.size())
                best.replace(g, wider.sorted_members());
        }
        res.trace.events.push_back({phase, s, k, sol.size, expanded, hit,
                                    seconds_since(t0)});
        return expanded;
    };

    u64 gap = 1;
    u64 lb_new = lb;
    while (lb + gap <= ub) {
        u64 s = lb + gap;
        auto got = memo_probe(s, ProbePhase::doubling);
        if (!got) {
            res.search_s = seconds_since(t_search);
            return finish(std::move(res), best, false);
        }
        if (*got < s) break;
        lb_new = *got; // expansion may clear more than the probed size
        gap *= 2;
    }
    u64 ub_new = std::min(lb + gap - 1, ub);

    while (lb_new != ub_new) {
        u64 mid = (lb_new + ub_new + 1) / 2;
        auto got = memo_probe(mid, ProbePhase::halving);
        if (!got) {
            res.search_s = seconds_since(t_search);
            return finish(std::move(res), best, false);
        }
        if (*got >= mid)
            lb_new = mid;
        else
            ub_new = mid - 1;
    }

    res.search_s = seconds_since(t_search);
    return finish(std::move(res), best, lb_new == best.size());
}

SolveResult solve_memoized(const Graph& g, const Gamma& gamma,
                           std::uint64_t rng_seed, const SearchBudget& budget) {
    DefectiveCache cache;
    return solve_memoized(g, gamma, rng_seed, budget, &cache);
}

} // namespace eqc
