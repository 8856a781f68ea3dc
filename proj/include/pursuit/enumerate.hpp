#pragma once

#include <cstdint>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

// Canonical form of a graph on n <= 11 vertices: the minimum upper-triangle
// bit string (graph6 bit order) over all vertex permutations, packed into a
// uint64. Equal keys <=> isomorphic graphs.
uint64_t canonical_key(const Graph& g);

// All graphs on exactly n vertices up to isomorphism (n <= 8), built by
// augmenting the (n-1)-vertex list with one new vertex per neighborhood
// subset and deduplicating by canonical key. Results are memoized per
// process and returned in a deterministic order.
const std::vector<Graph>& all_graphs(int n);

// The connected ones, same order.
const std::vector<Graph>& connected_graphs(int n);

}  // namespace pursuit
