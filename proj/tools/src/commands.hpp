#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace eqc::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;  // verify: witness fails the threshold
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;  // budget exhausted before proving optimality

// Anything that is the caller's fault: unreadable file, bad gamma literal,
// labels outside the graph, oracle size cap.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loads the graph and runs the configured algorithm. Throws InputError;
// budget exhaustion is reported via report.solved instead.
RunReport run_instance(const RunConfig& cfg);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct BenchConfig {
    std::string dir;
    std::vector<std::string> gammas;
    Algo algo = Algo::pro;
    std::optional<std::uint64_t> k;
    double time_limit_s = 10800.0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string out_path;  // empty = stdout
};

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);

struct VerifyConfig {
    std::string graph_path;
    std::string gamma = "0.9";
    std::string witness_path;
};

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace eqc::cli
