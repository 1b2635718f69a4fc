#ifndef CBNLAB_GRAPH_IO_HPP
#define CBNLAB_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cbnlab/bitstate.hpp"
#include "cbnlab/digraph.hpp"

namespace cbnlab {

enum class GraphFormat { edge_list, graph_json };

struct ParseError : std::runtime_error {
    int line; // 1-based; 0 when not line-addressable
    ParseError(std::string message, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + std::move(message)
                                         : std::move(message)),
          line(line_no) {}
};

struct ParsedGraph {
    Digraph graph;
    std::vector<std::string> warnings; // duplicate edges and the like
};

/// edge-list: one "u v" pair per whitespace-separated line, '#' starts a
/// comment; n is one past the largest id. graph-json: {"n": int,
/// "edges": [[u, v], ...]}. Duplicate edges are collapsed with a warning,
/// ids outside 0..n-1 are errors.
ParsedGraph parse_graph(std::string_view text, GraphFormat format);

std::string emit_graph(const Digraph& g, GraphFormat format);

/// Picks graph-json when the name ends in .json or the text starts with
/// '{', edge-list otherwise.
GraphFormat detect_format(std::string_view filename, std::string_view text);

/// A '0'/'1' string of length n (vertex 0 leftmost), or "ones", "zeros",
/// "random:SEED" (deterministic in the seed).
BitState parse_state(std::string_view s, int n);

} // namespace cbnlab

#endif
