#include "pursuit/graph_io.hpp"

#include <algorithm>
#include <sstream>

namespace pursuit {

namespace {

constexpr char kHeader[] = ">>graph6<<";

// graph6 byte values are printable ASCII 63..126 encoding 6 bits each.
int g6_value(const std::string& s, size_t pos) {
    if (pos >= s.size()) throw ParseError("graph6 line truncated", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("out-of-range graph6 character", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& input) {
    std::string s = input;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    size_t pos = 0;
    if (s.rfind(kHeader, 0) == 0) pos += sizeof(kHeader) - 1;
    if (pos >= s.size()) throw ParseError("empty graph6 line", pos);

    long long n;
    int first = g6_value(s, pos);
    if (first < 63) {
        n = first;
        pos += 1;
    } else {
        if (pos + 1 < s.size() && s[pos + 1] == '~')
            throw ParseError("graph6 vertex counts above 258047 are not supported", pos);
        long long a = g6_value(s, pos + 1);
        long long b = g6_value(s, pos + 2);
        long long c = g6_value(s, pos + 3);
        n = (a << 12) | (b << 6) | c;
        if (n < 63) throw ParseError("non-canonical long form for small vertex count", pos);
        pos += 4;
    }
    if (n == 0) throw ParseError("graphs need at least one vertex", pos);

    long long nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() - pos != nbytes)
        throw ParseError("malformed length: expected " + std::to_string(nbytes) +
                             " adjacency bytes, found " + std::to_string(s.size() - pos),
                         pos);

    std::vector<Edge> edges;
    long long bit = 0;
    for (size_t i = 0; i < nbytes; ++i) {
        int val = g6_value(s, pos + i);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool on = (val >> b) & 1;
            if (bit >= nbits) {
                if (on) throw ParseError("non-canonical padding bits", pos + i);
                continue;
            }
            if (on) {
                // Bits run column by column: (0,1), (0,2), (1,2), (0,3), ...
                long long k = bit;
                long long v = 1;
                while (k >= v) k -= v, ++v;
                edges.emplace_back(static_cast<int>(k), static_cast<int>(v));
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nacc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nacc == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nacc = 0;
            }
        }
    }
    if (nacc > 0) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    int max_id = -1;
    size_t offset = 0;
    while (std::getline(in, line)) {
        size_t line_start = offset;
        offset += line.size() + 1;
        std::string trimmed = line;
        if (auto h = trimmed.find('#'); h != std::string::npos) trimmed.resize(h);
        std::istringstream ls(trimmed);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment line
        if (!(ls >> v)) throw ParseError("edge line needs two vertex ids", line_start);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens on edge line", line_start);
        if (u < 0 || v < 0) throw ParseError("negative vertex id", line_start);
        if (u == v) throw ParseError("self-loop in edge list", line_start);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    int count = n >= 1 ? n : max_id + 1;
    if (count < 1) throw ParseError("edge list describes no vertices", 0);
    if (max_id >= count) throw ParseError("vertex id exceeds declared vertex count", 0);
    return Graph(count, edges);
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string encode_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace pursuit
