#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "report.hpp"

namespace {

using eqc::cli::RunConfig;

// Options every graph-consuming subcommand shares.
void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& format_str) {
    cmd->add_option("--graph", cfg.graph_path, "Input graph file (edge list or MatrixMarket)")
        ->required();
    cmd->add_option("--gamma", cfg.gamma, "Density threshold, decimal literal in (0,1)")
        ->capture_default_str();
    cmd->add_option("--output", format_str, "Report format: text, json or csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--witness-out", cfg.witness_out, "Write witness labels to this file");
    cmd->add_flag("--load-report", cfg.show_load_report, "Print loader statistics to stderr");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum edge-based quasi-clique solver suite"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string algo_str = "pro";
    std::string format_str = "text";

    CLI::App* solve = app.add_subcommand("solve", "Exact solve on one graph");
    add_common_options(solve, cfg, format_str);
    solve->add_option("--algo", algo_str, "pro, td, bu, heu, kdc or oracle")
        ->capture_default_str()
        ->check(CLI::IsMember({"pro", "td", "bu", "heu", "kdc", "oracle"}));
    solve->add_option("--k", cfg.k, "Missing-edge budget (kdc and oracle modes)");
    solve->add_option("--time-limit", cfg.time_limit_s, "Seconds before giving up")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    solve->add_option("--seed", cfg.seed, "Tie-breaking seed")->capture_default_str();
    solve->add_option("--max-n", cfg.oracle_max_n, "Oracle size cap override");

    CLI::App* heuristic = app.add_subcommand("heuristic", "Heuristic lower bound only");
    add_common_options(heuristic, cfg, format_str);
    heuristic->add_option("--seed", cfg.seed, "Tie-breaking seed")->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive reference answer (small n)");
    add_common_options(oracle, cfg, format_str);
    oracle->add_option("--k", cfg.k, "Check defective cliques for this budget instead");
    oracle->add_option("--max-n", cfg.oracle_max_n, "Size cap override");

    eqc::cli::BenchConfig bench_cfg;
    std::string bench_algo_str = "pro";
    CLI::App* bench = app.add_subcommand("bench", "Sweep a directory of graphs");
    bench->add_option("--dir", bench_cfg.dir, "Directory holding graph files")->required();
    bench->add_option("--gamma", bench_cfg.gammas, "Thresholds to sweep (repeatable)");
    bench->add_option("--algo", bench_algo_str, "pro, td, bu, heu, kdc or oracle")
        ->capture_default_str()
        ->check(CLI::IsMember({"pro", "td", "bu", "heu", "kdc", "oracle"}));
    bench->add_option("--k", bench_cfg.k, "Missing-edge budget (kdc and oracle modes)");
    bench->add_option("--time-limit", bench_cfg.time_limit_s, "Seconds per instance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_cfg.seed, "Tie-breaking seed")->capture_default_str();
    bench->add_option("--workers", bench_cfg.workers, "Concurrent instances")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--output", bench_cfg.out_path, "CSV output file (default stdout)");

    eqc::cli::VerifyConfig verify_cfg;
    CLI::App* verify = app.add_subcommand("verify", "Check a witness file against a graph");
    verify->add_option("--graph", verify_cfg.graph_path, "Input graph file")->required();
    verify->add_option("--gamma", verify_cfg.gamma, "Density threshold")->capture_default_str();
    verify->add_option("--witness", verify_cfg.witness_path, "File of vertex labels")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        // Help and version requests exit clean; everything else is bad input.
        return rc == 0 ? 0 : eqc::cli::kExitInputError;
    }

    if (solve->parsed()) {
        cfg.algo = *eqc::cli::parse_algo(algo_str);
        cfg.format = *eqc::cli::parse_format(format_str);
        return eqc::cli::cmd_solve(cfg, std::cout, std::cerr);
    }
    if (heuristic->parsed()) {
        cfg.algo = eqc::cli::Algo::heu;
        cfg.format = *eqc::cli::parse_format(format_str);
        return eqc::cli::cmd_solve(cfg, std::cout, std::cerr);
    }
    if (oracle->parsed()) {
        cfg.algo = eqc::cli::Algo::oracle;
        cfg.format = *eqc::cli::parse_format(format_str);
        return eqc::cli::cmd_solve(cfg, std::cout, std::cerr);
    }
    if (bench->parsed()) {
        bench_cfg.algo = *eqc::cli::parse_algo(bench_algo_str);
        return eqc::cli::cmd_bench(bench_cfg, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        return eqc::cli::cmd_verify(verify_cfg, std::cout, std::cerr);
    }
    return eqc::cli::kExitInputError;
}
