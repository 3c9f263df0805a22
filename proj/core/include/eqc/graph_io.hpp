#pragma once

#include <iosfwd>
#include <string>

#include "eqc/graph.hpp"

namespace eqc {

enum class GraphFormat { auto_detect, edge_list, matrix_market };

// What the loader saw and did; renderable for --load-report.
struct LoadReport {
    std::string path;
    GraphFormat format = GraphFormat::edge_list;
    Vertex vertices = 0;
    std::uint64_t edges = 0;
    std::int64_t index_base = 0;
    std::uint64_t input_lines = 0;
    std::uint64_t dropped_self_loops = 0;
    std::uint64_t merged_duplicates = 0;

    std::string to_string() const;
};

struct LoadedGraph {
    Graph graph;
    LoadReport report;
};

// Reads an undirected graph. Edge list: one "u v" pair per line, extra
// columns ignored, '#' and '%' comment lines skipped. Matrix Market:
// coordinate format, the dimension line is honored, entries below/above the
// diagonal are merged. Index base (0 or 1) is detected from the minimum
// vertex id seen. Malformed lines raise std::runtime_error naming the line.
LoadedGraph load_graph(const std::string& path,
                       GraphFormat format = GraphFormat::auto_detect);

// Same parser over an already-open stream; `path` only labels messages.
LoadedGraph load_graph(std::istream& in, const std::string& path,
                       GraphFormat format = GraphFormat::auto_detect);

} // namespace eqc
