#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

Graph path(int n);
Graph cycle(int n);
Graph star(int n);  // K_{1,n-1} on n vertices, center 0
Graph petersen();
Graph dodecahedron();

// The 58-vertex (3,9)-cage, vertices 0..57.
Graph cage_g1();

// Vertices are the edges of g in lexicographic order; adjacency is sharing an
// endpoint. Requires at least one edge.
Graph line_graph(const Graph& g);

// Every edge subdivided once. Original vertices keep ids 0..n-1; the
// subdivision vertex of the i-th edge (lexicographic) is n+i.
Graph subdivide_all_edges(const Graph& g);

// Same vertex set; u ~ v exactly when dist_g(u,v) = 2.
Graph square_minus_edges(const Graph& g);

// Named builders for the CLI and tests: pN, cN, starN, petersen,
// dodecahedron, g1, h1, linepetersen, subdodecahedron, fig1right, fig2.
std::optional<Graph> builtin_graph(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace pursuit
