#include "report.hpp"

#include <sstream>

#include <json.hpp>

namespace eqc::cli {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::pro:
            return "pro";
        case Algo::td:
            return "td";
        case Algo::bu:
            return "bu";
        case Algo::heu:
            return "heu";
        case Algo::kdc:
            return "kdc";
        case Algo::oracle:
            return "oracle";
    }
    return "?";
}

std::optional<Algo> parse_algo(std::string_view name) {
    if (name == "pro") return Algo::pro;
    if (name == "td") return Algo::td;
    if (name == "bu") return Algo::bu;
    if (name == "heu") return Algo::heu;
    if (name == "kdc") return Algo::kdc;
    if (name == "oracle") return Algo::oracle;
    return std::nullopt;
}

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::text:
            return "text";
        case OutputFormat::json:
            return "json";
        case OutputFormat::csv:
            return "csv";
    }
    return "?";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    return std::nullopt;
}

namespace {

using nlohmann::json;

json trace_to_json(const TraceRow& row) {
    return json{{"phase", row.phase},
                {"probed_size", row.probed_size},
                {"k", row.k},
                {"returned_size", row.returned_size},
                {"expanded_size", row.expanded_size},
                {"memo_hit", row.memo_hit},
                {"wall_s", row.wall_s}};
}

TraceRow trace_from_json(const json& j) {
    TraceRow row;
    row.phase = j.at("phase").get<std::string>();
    row.probed_size = j.at("probed_size").get<std::uint64_t>();
    row.k = j.at("k").get<std::uint64_t>();
    row.returned_size = j.at("returned_size").get<std::uint64_t>();
    row.expanded_size = j.at("expanded_size").get<std::uint64_t>();
    row.memo_hit = j.at("memo_hit").get<bool>();
    row.wall_s = j.at("wall_s").get<double>();
    return row;
}

}  // namespace

std::string RunReport::to_json() const {
    json j{{"instance", instance},
           {"n", n},
           {"m", m},
           {"gamma", gamma},
           {"algo", algo},
           {"s_star", s_star},
           {"solved", solved},
           {"time_s", time_s},
           {"heuristic_time_s", heuristic_time_s},
           {"search_time_s", search_time_s},
           {"check_calls", check_calls},
           {"memo_hits", memo_hits},
           {"witness", witness},
           {"error", error}};
    json rows = json::array();
    for (const auto& row : trace) rows.push_back(trace_to_json(row));
    j["trace"] = std::move(rows);
    return j.dump(2);
}

RunReport RunReport::from_json(const std::string& text) {
    json j = json::parse(text);
    RunReport r;
    r.instance = j.at("instance").get<std::string>();
    r.n = j.at("n").get<std::uint64_t>();
    r.m = j.at("m").get<std::uint64_t>();
    r.gamma = j.at("gamma").get<std::string>();
    r.algo = j.at("algo").get<std::string>();
    r.s_star = j.at("s_star").get<std::uint64_t>();
    r.solved = j.at("solved").get<bool>();
    r.time_s = j.at("time_s").get<double>();
    r.heuristic_time_s = j.at("heuristic_time_s").get<double>();
    r.search_time_s = j.at("search_time_s").get<double>();
    r.check_calls = j.at("check_calls").get<std::uint64_t>();
    r.memo_hits = j.at("memo_hits").get<std::uint64_t>();
    r.witness = j.at("witness").get<std::vector<std::int64_t>>();
    r.error = j.at("error").get<std::string>();
    for (const auto& row : j.at("trace")) r.trace.push_back(trace_from_json(row));
    return r;
}

std::string RunReport::csv_header() { return "instance,n,m,gamma,algo,s_star,time_s,solved"; }

namespace {

// Instance names come from file paths; quote if anything could break the row.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string RunReport::to_csv_row() const {
    std::ostringstream os;
    os << csv_field(instance) << ',' << n << ',' << m << ',' << gamma << ',' << algo << ','
       << s_star << ',' << time_s << ',' << (solved ? 1 : 0);
    return os.str();
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "instance:   " << instance << "\n"
       << "n, m:       " << n << ", " << m << "\n"
       << "gamma:      " << gamma << "\n"
       << "algo:       " << algo << "\n";
    if (!error.empty()) {
        os << "error:      " << error << "\n";
        return os.str();
    }
    os << "s_star:     " << s_star << (solved ? "" : "  (lower bound, budget exhausted)") << "\n"
       << "solved:     " << (solved ? "yes" : "no") << "\n"
       << "time_s:     " << time_s << "\n";
    if (heuristic_time_s > 0.0 || search_time_s > 0.0) {
        os << "  heuristic " << heuristic_time_s << "\n"
           << "  search    " << search_time_s << "\n";
    }
    if (check_calls > 0) os << "check_calls: " << check_calls << "\n";
    if (memo_hits > 0) os << "memo_hits:  " << memo_hits << "\n";
    if (!witness.empty()) {
        os << "witness:   ";
        for (auto v : witness) os << ' ' << v;
        os << "\n";
    }
    for (const auto& row : trace) {
        os << "  probe " << row.phase << " s=" << row.probed_size << " k=" << row.k
           << " got=" << row.returned_size;
        if (row.expanded_size > row.returned_size) os << " expanded=" << row.expanded_size;
        if (row.memo_hit) os << " (memo)";
        os << " " << row.wall_s << "s\n";
    }
    return os.str();
}

std::string RunReport::render(OutputFormat f) const {
    switch (f) {
        case OutputFormat::json:
            return to_json() + "\n";
        case OutputFormat::csv:
            return csv_header() + "\n" + to_csv_row() + "\n";
        case OutputFormat::text:
            break;
    }
    return to_text();
}

}  // namespace eqc::cli
