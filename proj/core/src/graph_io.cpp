#include "eqc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqc {

namespace {

constexpr std::int64_t kMaxVertices = 1'000'000'000;

struct RawEdges {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::int64_t min_id = -1; // -1 until an endpoint is seen
    std::int64_t max_id = -1;
    std::int64_t declared_n = 0; // matrix market only
    std::uint64_t lines = 0;
};

[[noreturn]] void bad_line(const std::string& path, std::uint64_t line,
                           const std::string& why) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + why);
}

bool parse_int(std::string_view tok, std::int64_t& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) toks.push_back(s.substr(i, j - i));
        i = j;
    }
    return toks;
}

void note_endpoint(RawEdges& raw, std::int64_t id) {
    if (raw.min_id < 0 || id < raw.min_id) raw.min_id = id;
    if (id > raw.max_id) raw.max_id = id;
}

RawEdges read_edge_list(std::istream& in, const std::string& path) {
    RawEdges raw;
    std::string line;
    while (std::getline(in, line)) {
        ++raw.lines;
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        char first = toks[0][0];
        if (first == '#' || first == '%') continue;
        if (toks.size() < 2)
            bad_line(path, raw.lines, "expected two endpoints, got 1 token");
        std::int64_t u, v;
        if (!parse_int(toks[0], u) || !parse_int(toks[1], v))
            bad_line(path, raw.lines, "endpoint is not an integer: \"" + std::string(line) + "\"");
        if (u < 0 || v < 0)
            bad_line(path, raw.lines, "negative vertex id");
        raw.pairs.emplace_back(u, v);
        note_endpoint(raw, u);
        note_endpoint(raw, v);
    }
    return raw;
}

RawEdges read_matrix_market(std::istream& in, const std::string& path) {
    RawEdges raw;
    std::string line;
    bool saw_header = false;
    bool saw_dims = false;
    while (std::getline(in, line)) {
        ++raw.lines;
        if (!saw_header) {
            if (line.rfind("%%MatrixMarket", 0) != 0)
                bad_line(path, raw.lines, "missing %%MatrixMarket header");
            std::istringstream hs(line);
            std::string tag, object, fmt;
            hs >> tag >> object >> fmt;
            if (fmt != "coordinate")
                bad_line(path, raw.lines, "only coordinate format is supported");
            saw_header = true;
            continue;
        }
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '%') continue;
        if (!saw_dims) {
            if (toks.size() < 3)
                bad_line(path, raw.lines, "dimension line needs rows cols nnz");
            std::int64_t rows, cols, nnz;
            if (!parse_int(toks[0], rows) || !parse_int(toks[1], cols) ||
                !parse_int(toks[2], nnz))
                bad_line(path, raw.lines, "dimension line is not numeric");
            raw.declared_n = std::max(rows, cols);
            saw_dims = true;
            continue;
        }
        if (toks.size() < 2)
            bad_line(path, raw.lines, "entry needs two indices");
        std::int64_t u, v;
        if (!parse_int(toks[0], u) || !parse_int(toks[1], v))
            bad_line(path, raw.lines, "entry index is not an integer");
        if (u < 0 || v < 0)
            bad_line(path, raw.lines, "negative index");
        raw.pairs.emplace_back(u, v); // any weight column is ignored
        note_endpoint(raw, u);
        note_endpoint(raw, v);
    }
    if (!saw_header)
        throw std::runtime_error(path + ": empty matrix market file");
    return raw;
}

GraphFormat sniff(std::istream& in) {
    auto pos = in.tellg();
    std::string line;
    std::getline(in, line);
    in.clear();
    in.seekg(pos);
    if (line.rfind("%%MatrixMarket", 0) == 0) return GraphFormat::matrix_market;
    return GraphFormat::edge_list;
}

} // namespace

LoadedGraph load_graph(std::istream& in, const std::string& path, GraphFormat format) {
    if (format == GraphFormat::auto_detect) {
        // .mtx extension commits to matrix market (a missing header is then
        // an error); otherwise the header line decides.
        bool mtx_ext = path.size() >= 4 && path.rfind(".mtx") == path.size() - 4;
        format = mtx_ext ? GraphFormat::matrix_market : sniff(in);
    }

    RawEdges raw = format == GraphFormat::matrix_market
                       ? read_matrix_market(in, path)
                       : read_edge_list(in, path);

    // 1-based unless a 0 id shows up; files indexed from some id > 1 keep
    // their leading gap rather than being compacted.
    std::int64_t base = (raw.min_id == 0) ? 0 : 1;
    std::int64_t n64 = 0;
    if (raw.max_id >= 0) n64 = raw.max_id - base + 1;
    n64 = std::max(n64, raw.declared_n);
    if (n64 > kMaxVertices)
        throw std::runtime_error(path + ": vertex count " + std::to_string(n64) +
                                 " exceeds supported maximum");

    LoadedGraph out;
    out.report.path = path;
    out.report.format = format;
    out.report.index_base = base;
    out.report.input_lines = raw.lines;

    Vertex n = static_cast<Vertex>(n64);
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(raw.pairs.size());
    std::uint64_t loops = 0;
    for (auto [a, b] : raw.pairs) {
        if (a == b) {
            ++loops;
            continue;
        }
        edges.emplace_back(static_cast<Vertex>(a - base), static_cast<Vertex>(b - base));
    }
    out.graph = Graph::from_edges(n, edges);
    out.graph.set_index_base(base);
    out.report.vertices = n;
    out.report.edges = out.graph.edge_count();
    out.report.dropped_self_loops = loops;
    out.report.merged_duplicates = edges.size() - out.graph.edge_count();
    return out;
}

LoadedGraph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return load_graph(in, path, format);
}

std::string LoadReport::to_string() const {
    const char* fmt = format == GraphFormat::matrix_market ? "matrix-market" : "edge-list";
    std::ostringstream os;
    os << "loaded " << path << " (" << fmt << "): " << vertices << " vertices, "
       << edges << " edges, index base " << index_base << ", " << input_lines
       << " lines, " << dropped_self_loops << " self loops dropped, "
       << merged_duplicates << " duplicate edges merged";
    return os.str();
}

} // namespace eqc
