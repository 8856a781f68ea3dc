#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

// Sentinel for unreachable vertices / acyclic graphs.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Fixed-width bitset sized at construction; one bit per vertex.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }
    void set(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    int count() const;
    bool empty() const;
    bool intersects(const VertexSet& o) const;
    bool subset_of(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const = default;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);

    // Calls f(v) for every member, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                int v = static_cast<int>(w * 64) + __builtin_ctzll(bits);
                f(v);
                bits &= bits - 1;
            }
        }
    }

  private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1. Loops are never
// stored; game semantics treat every vertex as reflexive (a loop move is a
// pass), structural predicates see the simple graph.
class Graph {
  public:
    Graph(int n, std::span<const Edge> edges, std::string name = "");
    Graph(int n, std::initializer_list<Edge> edges, std::string name = "")
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::string& name() const { return name_; }

    const std::vector<int>& neighbors(int v) const { return adj_list_[v]; }
    const VertexSet& neighbor_set(int v) const { return adj_set_[v]; }
    const VertexSet& closed_neighbor_set(int v) const { return closed_set_[v]; }
    int degree(int v) const { return static_cast<int>(adj_list_[v].size()); }
    bool adjacent(int u, int v) const { return adj_set_[u].test(v); }

    // Edges as sorted (u < v) pairs, lexicographic order.
    std::vector<Edge> edges() const;

    Graph with_name(std::string name) const;

  private:
    int n_;
    int m_ = 0;
    std::string name_;
    std::vector<std::vector<int>> adj_list_;
    std::vector<VertexSet> adj_set_;
    std::vector<VertexSet> closed_set_;
};

struct DominatedPair {
    int dominated;  // u with N(u) ⊆ N[v]
    int dominator;  // v
    bool operator==(const DominatedPair&) const = default;
};

struct DominationWitness {
    std::vector<int> set;  // sorted ascending
    int size() const { return static_cast<int>(set.size()); }
};

// BFS distances from src; kInfinity where unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

// Length of a shortest cycle, kInfinity for forests.
int girth(const Graph& g);

// (min degree, max degree).
std::pair<int, int> degree_stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_universal_vertex(const Graph& g);

// Smallest (u, then v) pair with u != v and N(u) ⊆ N[v], if any.
std::optional<DominatedPair> find_dominated_vertex(const Graph& g);

// Exact minimum dominating set by branch and bound. If a budget is given and
// gamma(g) > budget, returns nullopt ("exceeds budget"). The witness is the
// lexicographically smallest minimum-size set.
std::optional<DominationWitness> domination_number(const Graph& g,
                                                   std::optional<int> budget = std::nullopt);

// True iff gamma(g) <= 2 (cheap scan, no branch and bound).
bool gamma_at_most_2(const Graph& g);

// Induced subgraph on `keep` (ascending vertex ids); vertex i of the result
// is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// g minus one vertex; ids above u shift down by one.
Graph remove_vertex(const Graph& g, int u);

}  // namespace pursuit
