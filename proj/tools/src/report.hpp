#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqc/graph.hpp"

namespace eqc::cli {

enum class Algo { pro, td, bu, heu, kdc, oracle };

const char* algo_name(Algo a);
std::optional<Algo> parse_algo(std::string_view name);

enum class OutputFormat { text, json, csv };

const char* format_name(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
    std::string graph_path;
    std::string gamma = "0.9";
    Algo algo = Algo::pro;
    std::optional<std::uint64_t> k;  // missing-edge budget, kdc and oracle modes
    double time_limit_s = 10800.0;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::text;
    std::string witness_out;  // empty = don't write a witness file
    bool show_load_report = false;
    std::optional<Vertex> oracle_max_n;
};

struct TraceRow {
    std::string phase;
    std::uint64_t probed_size = 0;
    std::uint64_t k = 0;
    std::uint64_t returned_size = 0;
    std::uint64_t expanded_size = 0;
    bool memo_hit = false;
    double wall_s = 0.0;
};

// One solver run, flattened for serialization. Witness holds external
// vertex labels, not internal ids, so it matches the input file.
struct RunReport {
    std::string instance;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::string gamma;
    std::string algo;
    std::uint64_t s_star = 0;
    bool solved = false;
    double time_s = 0.0;
    double heuristic_time_s = 0.0;
    double search_time_s = 0.0;
    std::uint64_t check_calls = 0;
    std::uint64_t memo_hits = 0;
    std::vector<std::int64_t> witness;  // external labels as read from the file
    std::vector<TraceRow> trace;
    std::string error;  // nonempty when the run failed outright

    std::string to_json() const;
    static RunReport from_json(const std::string& text);

    static std::string csv_header();
    std::string to_csv_row() const;

    std::string to_text() const;

    std::string render(OutputFormat f) const;
};

}  // namespace eqc::cli
