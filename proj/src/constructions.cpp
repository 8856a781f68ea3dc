#include "pursuit/constructions.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace pursuit {

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges, "P" + std::to_string(n));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges, "C" + std::to_string(n));
}

Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges, "star" + std::to_string(n));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);      // outer 5-cycle
        edges.emplace_back(i, i + 5);            // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, edges, "petersen");
}

Graph dodecahedron() {
    // Outer 10-cycle 0..9, inner 5-cycle 10..14, outer pentagon 15..19.
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i) edges.emplace_back(i, (i + 1) % 10);
    for (int i = 0; i < 5; ++i) edges.emplace_back(10 + i, 10 + (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(15 + i, 15 + (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(15 + i, 2 * i + 1);
    for (int i = 0; i < 5; ++i) edges.emplace_back(10 + (i + 1) % 5, (2 * i + 2) % 10);
    return Graph(20, edges, "dodecahedron");
}

Graph cage_g1() {
    static constexpr std::array<Edge, 87> kEdges{{
        {0, 1},   {0, 8},   {0, 57},  {1, 2},   {1, 26},  {2, 3},
        {2, 41},  {3, 4},   {3, 12},  {4, 5},   {4, 46},  {5, 6},
        {5, 54},  {6, 7},   {6, 33},  {7, 8},   {7, 19},  {8, 9},
        {9, 10},  {9, 38},  {10, 11}, {10, 51}, {11, 12}, {11, 30},
        {12, 13}, {13, 14}, {13, 21}, {14, 15}, {14, 35}, {15, 16},
        {15, 53}, {16, 17}, {16, 40}, {17, 18}, {17, 47}, {18, 19},
        {18, 28}, {19, 20}, {20, 21}, {20, 43}, {21, 22}, {22, 23},
        {22, 56}, {23, 24}, {23, 39}, {24, 25}, {24, 32}, {25, 26},
        {25, 52}, {26, 27}, {27, 28}, {27, 36}, {28, 29}, {29, 30},
        {29, 55}, {30, 31}, {31, 32}, {31, 44}, {32, 33}, {33, 34},
        {34, 35}, {34, 49}, {35, 36}, {36, 37}, {37, 38}, {37, 45},
        {38, 39}, {39, 40}, {40, 41}, {41, 42}, {42, 43}, {42, 50},
        {43, 44}, {44, 45}, {45, 46}, {46, 47}, {47, 48}, {48, 49},
        {48, 57}, {49, 50}, {50, 51}, {51, 52}, {52, 53}, {53, 54},
        {54, 55}, {55, 56}, {56, 57},
    }};
    return Graph(58, std::span<const Edge>(kEdges), "G1");
}

Graph line_graph(const Graph& g) {
    auto edges = g.edges();
    if (edges.empty()) throw std::invalid_argument("line graph needs at least one edge");
    std::vector<Edge> out;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(static_cast<int>(edges.size()), out, "L(" + g.name() + ")");
}

Graph subdivide_all_edges(const Graph& g) {
    auto edges = g.edges();  // lexicographic
    int n = g.vertex_count();
    std::vector<Edge> out;
    for (size_t i = 0; i < edges.size(); ++i) {
        int mid = n + static_cast<int>(i);
        out.emplace_back(edges[i].first, mid);
        out.emplace_back(mid, edges[i].second);
    }
    return Graph(n + static_cast<int>(edges.size()), out, "subdivide(" + g.name() + ")");
}

Graph square_minus_edges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> out;
    for (int u = 0; u < n; ++u) {
        VertexSet two_away(n);
        for (int w : g.neighbors(u)) two_away |= g.neighbor_set(w);
        two_away.for_each([&](int v) {
            if (v > u && !g.adjacent(u, v)) out.emplace_back(u, v);
        });
    }
    return Graph(n, out, g.name() + "^2-E");
}

namespace {

Graph fig1_right() {
    // Triangle 2,3,4 with two extra leaves 0,1 on the universal vertex 4.
    return Graph(5, {{2, 3}, {2, 4}, {3, 4}, {0, 4}, {1, 4}}, "fig1right");
}

Graph fig2_guard() {
    // 10-vertex graph with a triangle, no dominated vertex and gamma 3 whose
    // attacking cop number is still 2.
    return Graph(10,
                 {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 4},
                  {3, 6}, {4, 7}, {5, 8}, {5, 9}, {6, 7}, {6, 9}, {7, 8}, {8, 9}},
                 "fig2");
}

std::optional<int> parse_size(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.rfind(prefix, 0) != 0) return std::nullopt;
    const char* digits = name.c_str() + prefix.size();
    char* end = nullptr;
    long v = std::strtol(digits, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000000) return std::nullopt;
    return static_cast<int>(v);
}

}  // namespace

std::optional<Graph> builtin_graph(const std::string& name) {
    if (auto n = parse_size(name, "p")) return path(*n);
    if (auto n = parse_size(name, "c")) {
        if (*n < 3) return std::nullopt;
        return cycle(*n);
    }
    if (auto n = parse_size(name, "star")) return star(*n);
    if (name == "petersen") return petersen();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "g1") return cage_g1();
    if (name == "h1") return square_minus_edges(cage_g1()).with_name("H1");
    if (name == "linepetersen") return line_graph(petersen());
    if (name == "subdodecahedron") return subdivide_all_edges(dodecahedron());
    if (name == "fig1right") return fig1_right();
    if (name == "fig2") return fig2_guard();
    return std::nullopt;
}

std::vector<std::string> builtin_names() {
    return {"p<N>",       "c<N>",         "star<N>",      "petersen",
            "dodecahedron", "g1",         "h1",           "linepetersen",
            "subdodecahedron", "fig1right", "fig2"};
}

}  // namespace pursuit
