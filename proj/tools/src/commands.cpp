#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "eqc/frameworks.hpp"
#include "eqc/graph_io.hpp"
#include "eqc/heuristics.hpp"
#include "eqc/oracle.hpp"

namespace eqc::cli {
namespace {

namespace fs = std::filesystem;

const char* phase_name(ProbePhase p) {
    switch (p) {
        case ProbePhase::doubling:
            return "doubling";
        case ProbePhase::halving:
            return "halving";
        case ProbePhase::top_down:
            return "top_down";
    }
    return "?";
}

std::vector<std::int64_t> to_labels(const Graph& g, std::span<const Vertex> witness) {
    std::vector<std::int64_t> labels;
    labels.reserve(witness.size());
    for (Vertex v : witness) labels.push_back(g.label(v));
    return labels;
}

Gamma parse_gamma_or_throw(const std::string& text) {
    try {
        return Gamma::parse(text);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

LoadedGraph load_or_throw(const std::string& path) {
    try {
        return load_graph(path);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

void fill_from_solve(RunReport& rep, const Graph& g, const SolveResult& r) {
    rep.s_star = r.optimal_size;
    rep.solved = r.solved;
    rep.witness = to_labels(g, r.witness);
    rep.check_calls = r.trace.check_calls();
    rep.memo_hits = r.trace.memo_hits();
    rep.heuristic_time_s = r.heuristic_s;
    rep.search_time_s = r.search_s;
    for (const ProbeEvent& e : r.trace.events) {
        TraceRow row;
        row.phase = phase_name(e.phase);
        row.probed_size = e.probed_size;
        row.k = e.k;
        row.returned_size = e.returned_size;
        row.expanded_size = e.expanded_size;
        row.memo_hit = e.memo_hit;
        row.wall_s = e.wall_s;
        rep.trace.push_back(std::move(row));
    }
}

void write_witness_file(const std::string& path, const std::vector<std::int64_t>& labels) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open witness output file: " + path);
    for (auto v : labels) out << v << "\n";
    if (!out.good()) throw InputError("failed writing witness file: " + path);
}

}  // namespace

RunReport run_instance(const RunConfig& cfg) {
    if (cfg.time_limit_s <= 0.0) throw InputError("time limit must be positive");

    RunReport rep;
    rep.instance = fs::path(cfg.graph_path).filename().string();
    rep.gamma = cfg.gamma;
    rep.algo = algo_name(cfg.algo);

    // The literal is validated even where the value goes unused (kdc mode),
    // so a typo never passes silently.
    Gamma gamma = parse_gamma_or_throw(cfg.gamma);

    LoadedGraph lg = load_or_throw(cfg.graph_path);
    const Graph& g = lg.graph;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();

    SearchBudget budget;
    budget.time_limit_s = cfg.time_limit_s;

    auto start = std::chrono::steady_clock::now();
    switch (cfg.algo) {
        case Algo::pro:
            fill_from_solve(rep, g, solve_memoized(g, gamma, cfg.seed, budget));
            break;
        case Algo::td:
            fill_from_solve(rep, g, solve_top_down(g, gamma, budget));
            break;
        case Algo::bu:
            fill_from_solve(rep, g, solve_bottom_up(g, gamma, {}, budget));
            break;
        case Algo::heu: {
            TieBreakRng rng(cfg.seed);
            VertexSelection seed = neighborhood_suffix_heuristic(g, gamma);
            std::vector<Vertex> base = seed.sorted_members();
            VertexSelection grown = expand_solution(g, gamma, base, rng);
            rep.s_star = grown.size();
            rep.witness = to_labels(g, grown.sorted_members());
            rep.solved = true;  // ran to completion; the size is a lower bound
            break;
        }
        case Algo::kdc: {
            if (!cfg.k) throw InputError("kdc mode needs --k");
            DefectiveResult r = max_defective_clique(g, *cfg.k, {}, budget);
            rep.s_star = r.size;
            rep.witness = to_labels(g, r.witness);
            rep.solved = r.optimal;
            break;
        }
        case Algo::oracle: {
            OracleLimit limit;
            if (cfg.oracle_max_n) limit.max_n = *cfg.oracle_max_n;
            try {
                OracleResult r = cfg.k ? brute_max_defective_clique(g, *cfg.k, limit)
                                       : brute_max_quasi_clique(g, gamma, limit);
                rep.s_star = r.size;
                rep.witness = to_labels(g, r.witness);
                rep.solved = true;
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            break;
        }
    }
    rep.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.show_load_report) {
            // Loaded twice only when the report is requested; the second
            // load inside run_instance keeps the common path simple.
            LoadedGraph lg = load_or_throw(cfg.graph_path);
            err << lg.report.to_string();
        }
        RunReport rep = run_instance(cfg);
        out << rep.render(cfg.format);
        if (!cfg.witness_out.empty()) write_witness_file(cfg.witness_out, rep.witness);
        return rep.solved ? kExitOk : kExitBudget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
    std::error_code ec;
    if (!fs::is_directory(cfg.dir, ec)) {
        err << "error: not a directory: " << cfg.dir << "\n";
        return kExitInputError;
    }

    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(cfg.dir, ec)) {
        if (entry.is_regular_file()) files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());

    std::vector<std::string> gammas = cfg.gammas;
    if (gammas.empty()) gammas.push_back("0.9");

    std::ofstream file_out;
    std::ostream* os = &out;
    if (!cfg.out_path.empty()) {
        file_out.open(cfg.out_path);
        if (!file_out) {
            err << "error: cannot open output file: " << cfg.out_path << "\n";
            return kExitInputError;
        }
        os = &file_out;
    }

    *os << RunReport::csv_header() << "\n";
    if (files.empty()) {
        err << "warning: no graph files in " << cfg.dir << "\n";
        return kExitOk;
    }

    struct Task {
        std::string path;
        std::string gamma;
    };
    std::vector<Task> tasks;
    tasks.reserve(files.size() * gammas.size());
    for (const auto& f : files)
        for (const auto& gm : gammas) tasks.push_back({f, gm});

    std::vector<RunReport> results(tasks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            RunConfig rc;
            rc.graph_path = tasks[i].path;
            rc.gamma = tasks[i].gamma;
            rc.algo = cfg.algo;
            rc.k = cfg.k;
            rc.time_limit_s = cfg.time_limit_s;
            rc.seed = cfg.seed;
            try {
                results[i] = run_instance(rc);
            } catch (const std::exception& e) {
                // A broken instance must not kill the sweep; the row keeps
                // its slot with solved=0 and the reason in the error field.
                RunReport rep;
                rep.instance = fs::path(tasks[i].path).filename().string();
                rep.gamma = tasks[i].gamma;
                rep.algo = algo_name(cfg.algo);
                rep.error = e.what();
                results[i] = rep;
            }
        }
    };

    unsigned nworkers = std::max(1u, cfg.workers);
    nworkers = std::min<unsigned>(nworkers, static_cast<unsigned>(tasks.size()));
    if (nworkers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& rep : results) *os << rep.to_csv_row() << "\n";
    os->flush();

    for (const auto& gm : gammas) {
        std::uint64_t solved = 0, total = 0;
        for (const auto& rep : results) {
            if (rep.gamma != gm) continue;
            ++total;
            if (rep.solved) ++solved;
        }
        err << "gamma " << gm << ": solved " << solved << "/" << total << "\n";
    }
    for (const auto& rep : results) {
        if (!rep.error.empty())
            err << "failed: " << rep.instance << " (gamma " << rep.gamma << "): " << rep.error
                << "\n";
    }
    return kExitOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        LoadedGraph lg = load_or_throw(cfg.graph_path);
        const Graph& g = lg.graph;
        Gamma gamma = parse_gamma_or_throw(cfg.gamma);

        std::ifstream in(cfg.witness_path);
        if (!in) throw InputError("cannot open witness file: " + cfg.witness_path);

        std::vector<Vertex> members;
        std::string line;
        std::uint64_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string token;
            while (ls >> token) {
                std::int64_t label = 0;
                try {
                    std::size_t used = 0;
                    label = std::stoll(token, &used);
                    if (used != token.size()) throw std::invalid_argument(token);
                } catch (const std::exception&) {
                    throw InputError(cfg.witness_path + ":" + std::to_string(line_no) +
                                     ": not a vertex label: " + token);
                }
                std::int64_t id = label - g.index_base();
                if (id < 0 || id >= static_cast<std::int64_t>(g.vertex_count()))
                    throw InputError(cfg.witness_path + ":" + std::to_string(line_no) +
                                     ": unknown label " + std::to_string(label));
                members.push_back(static_cast<Vertex>(id));
            }
        }

        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
            throw InputError("witness repeats a label");

        std::uint64_t size = members.size();
        std::uint64_t edges = count_edges_within(g, members);
        std::uint64_t required = gamma.required_edges(size);
        std::uint64_t missing = pair_count(size) - edges;
        bool ok = is_quasi_clique(g, members, gamma);

        out << "vertices:  " << size << "\n"
            << "edges:     " << edges << "\n"
            << "required:  " << required << "\n"
            << "missing:   " << missing << "\n"
            << "feasible:  " << (ok ? "yes" : "no") << "\n";
        return ok ? kExitOk : kExitInfeasible;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace eqc::cli
