#include "cbnlab/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include <json.hpp>

namespace cbnlab {

namespace {

ParsedGraph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    int line_no = 0;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        long long u = 0, v = 0;
        if (!(fields >> u)) continue; // blank or comment-only line
        if (!(fields >> v)) throw ParseError("expected two vertex ids", line_no);
        std::string rest;
        if (fields >> rest) throw ParseError("trailing token '" + rest + "'", line_no);
        if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
        if (u > 1000000 || v > 1000000) throw ParseError("vertex id too large", line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
    }
    if (edges.empty()) throw ParseError("no edges: empty graph");

    ParsedGraph out;
    const std::size_t raw = edges.size();
    out.graph = Digraph(max_id + 1, std::move(edges));
    if (static_cast<std::size_t>(out.graph.edge_count()) != raw)
        out.warnings.push_back(std::to_string(raw - static_cast<std::size_t>(out.graph.edge_count())) +
                               " duplicate edge(s) collapsed");
    return out;
}

ParsedGraph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("graph-json needs an object with \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    const long long n = doc["n"].get<long long>();
    if (n <= 0) throw ParseError("empty graph: \"n\" must be positive");
    if (n > 1000000) throw ParseError("\"n\" too large");
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a [u, v] pair of integers");
        const long long u = e[0].get<long long>();
        const long long v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge [" + std::to_string(u) + ", " + std::to_string(v) +
                             "] references a vertex outside 0.." + std::to_string(n - 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    ParsedGraph out;
    const std::size_t raw = edges.size();
    out.graph = Digraph(static_cast<int>(n), std::move(edges));
    if (static_cast<std::size_t>(out.graph.edge_count()) != raw)
        out.warnings.push_back(std::to_string(raw - static_cast<std::size_t>(out.graph.edge_count())) +
                               " duplicate edge(s) collapsed");
    return out;
}

} // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_json_graph(text);
}

std::string emit_graph(const Digraph& g, GraphFormat format) {
    if (format == GraphFormat::edge_list) {
        std::string out;
        for (const auto& [u, v] : g.edges()) {
            out += std::to_string(u);
            out += ' ';
            out += std::to_string(v);
            out += '\n';
        }
        return out;
    }
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump();
}

GraphFormat detect_format(std::string_view filename, std::string_view text) {
    if (filename.size() >= 5 && filename.substr(filename.size() - 5) == ".json")
        return GraphFormat::graph_json;
    for (const char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' ? GraphFormat::graph_json : GraphFormat::edge_list;
    }
    return GraphFormat::edge_list;
}

BitState parse_state(std::string_view s, int n) {
    if (s == "ones") return BitState(n, true);
    if (s == "zeros") return BitState(n, false);
    if (s.rfind("random:", 0) == 0) {
        const std::string_view seed_text = s.substr(7);
        std::uint64_t seed = 0;
        const auto [ptr, ec] =
            std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), seed);
        if (ec != std::errc{} || ptr != seed_text.data() + seed_text.size())
            throw ParseError("bad seed in '" + std::string(s) + "'");
        std::mt19937_64 rng(seed);
        BitState x(n);
        for (int i = 0; i < n; ++i) x.set(i, (rng() & 1u) != 0);
        return x;
    }
    if (static_cast<int>(s.size()) != n)
        throw ParseError("state has length " + std::to_string(s.size()) + ", expected " +
                         std::to_string(n));
    try {
        return BitState::from_string(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace cbnlab
