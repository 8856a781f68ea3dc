#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    size_t byte_offset;
};

// One graph6 line (optional ">>graph6<<" header tolerated, trailing newline
// stripped). Rejects malformed length fields, out-of-range characters and
// nonzero padding bits, reporting the byte offset.
Graph parse_graph6(const std::string& text);

// Canonical header-free graph6 encoding.
std::string encode_graph6(const Graph& g);

// Every non-empty line is "u v", 0-indexed; '#' lines are comments. Vertex
// count is max id + 1 unless `n` is given.
Graph parse_edge_list(const std::string& text, int n = -1);
std::string encode_edge_list(const Graph& g);

// Undirected DOT, one node per vertex.
std::string encode_dot(const Graph& g);

}  // namespace pursuit
