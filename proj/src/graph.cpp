#include "pursuit/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pursuit {

int VertexSet::count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
}

bool VertexSet::empty() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Graph::Graph(int n, std::span<const Edge> edges, std::string name)
    : n_(n), name_(std::move(name)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_set_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not stored");
        adj_set_[u].set(v);
        adj_set_[v].set(u);
    }
    adj_list_.resize(n);
    closed_set_.resize(n);
    for (int v = 0; v < n; ++v) {
        adj_set_[v].for_each([&](int u) { adj_list_[v].push_back(u); });
        m_ += static_cast<int>(adj_list_[v].size());
        closed_set_[v] = adj_set_[v];
        closed_set_[v].set(v);
    }
    m_ /= 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_list_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.vertex_count()) throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(g.vertex_count(), kInfinity);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[y] == kInfinity) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

int girth(const Graph& g) {
    // BFS from every root; a non-tree edge (x,y) seen from root closes a walk
    // of length dist[x]+dist[y]+1. The minimum over all roots is exact.
    int n = g.vertex_count();
    int best = kInfinity;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::deque<int> queue{s};
        dist[s] = 0;
        parent[s] = -1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : g.neighbors(x)) {
                if (dist[y] == kInfinity) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best;
}

std::pair<int, int> degree_stats(const Graph& g) {
    int lo = g.vertex_count(), hi = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi};
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfinity; });
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && g.neighbor_set(u).intersects(g.neighbor_set(v))) return false;
    return true;
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : g.neighbors(x)) {
                if (color[y] == -1) {
                    color[y] = color[x] ^ 1;
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.vertex_count() - 1) return true;
    return false;
}

std::optional<DominatedPair> find_dominated_vertex(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (u != v && g.neighbor_set(u).subset_of(g.closed_neighbor_set(v)))
                return DominatedPair{u, v};
    return std::nullopt;
}

bool gamma_at_most_2(const Graph& g) {
    int n = g.vertex_count();
    if (has_universal_vertex(g)) return true;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet cover = g.closed_neighbor_set(u);
            cover |= g.closed_neighbor_set(v);
            if (cover.count() == n) return true;
        }
    }
    return false;
}

namespace {

// Branch and bound for minimum dominating sets: greedy upper bound, a
// coverage lower bound, and branching over the dominators of the hardest
// uncovered vertex.
class DominationSolver {
  public:
    explicit DominationSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    // Smallest dominating set of size <= limit; empty if none exists.
    std::vector<int> minimum(int limit, std::vector<int> upper_bound_set) {
        limit_ = limit;
        min_free_ = 0;
        stop_at_first_ = false;
        chosen_.clear();
        best_.clear();
        if (!upper_bound_set.empty() && static_cast<int>(upper_bound_set.size()) <= limit)
            best_ = std::move(upper_bound_set);
        VertexSet all(n_);
        for (int v = 0; v < n_; ++v) all.set(v);
        search(all);
        return best_;
    }

    // Whether a dominating set of size <= limit exists that contains `prefix`
    // with every further vertex greater than prefix.back().
    bool feasible(const std::vector<int>& prefix, int limit) {
        limit_ = limit;
        min_free_ = prefix.empty() ? 0 : prefix.back() + 1;
        stop_at_first_ = true;
        chosen_ = prefix;
        best_.clear();
        VertexSet uncovered(n_);
        for (int v = 0; v < n_; ++v) uncovered.set(v);
        for (int v : prefix)
            g_.closed_neighbor_set(v).for_each([&](int x) { uncovered.reset(x); });
        search(uncovered);
        return !best_.empty();
    }

  private:
    const Graph& g_;
    int n_;
    int limit_ = 0;
    int min_free_ = 0;
    bool stop_at_first_ = false;
    std::vector<int> chosen_, best_;

    int max_cover(const VertexSet& uncovered) const {
        int best_cov = 1;
        for (int v = min_free_; v < n_; ++v) {
            VertexSet s = g_.closed_neighbor_set(v);
            s &= uncovered;
            best_cov = std::max(best_cov, s.count());
        }
        return best_cov;
    }

    void search(const VertexSet& uncovered) {
        if (stop_at_first_ && !best_.empty()) return;
        int open = uncovered.count();
        if (open == 0) {
            if (best_.empty() || chosen_.size() < best_.size()) best_ = chosen_;
            return;
        }
        int cap = limit_;
        if (!stop_at_first_ && !best_.empty())
            cap = std::min<int>(cap, static_cast<int>(best_.size()) - 1);
        int slots = cap - static_cast<int>(chosen_.size());
        if (slots <= 0) return;
        int mc = max_cover(uncovered);
        if ((open + mc - 1) / mc > slots) return;

        // Every dominating set hits N[u] for each uncovered u; branch on the
        // uncovered vertex with the fewest admissible dominators.
        int pick = -1, pick_cands = n_ + 1;
        uncovered.for_each([&](int u) {
            int cands = 0;
            g_.closed_neighbor_set(u).for_each([&](int w) {
                if (w >= min_free_) ++cands;
            });
            if (cands < pick_cands) {
                pick = u;
                pick_cands = cands;
            }
        });
        if (pick_cands == 0) return;

        std::vector<int> cands;
        g_.closed_neighbor_set(pick).for_each([&](int w) {
            if (w >= min_free_) cands.push_back(w);
        });
        std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
            VertexSet sa = g_.closed_neighbor_set(a); sa &= uncovered;
            VertexSet sb = g_.closed_neighbor_set(b); sb &= uncovered;
            return sa.count() > sb.count();
        });
        for (int w : cands) {
            chosen_.push_back(w);
            VertexSet next = uncovered;
            g_.closed_neighbor_set(w).for_each([&](int x) { next.reset(x); });
            search(next);
            chosen_.pop_back();
            if (stop_at_first_ && !best_.empty()) return;
        }
    }
};

std::vector<int> greedy_dominating_set(const Graph& g) {
    int n = g.vertex_count();
    VertexSet uncovered(n);
    for (int v = 0; v < n; ++v) uncovered.set(v);
    std::vector<int> out;
    while (uncovered.count() > 0) {
        int pick = 0, pick_cov = -1;
        for (int v = 0; v < n; ++v) {
            VertexSet s = g.closed_neighbor_set(v);
            s &= uncovered;
            int c = s.count();
            if (c > pick_cov) {
                pick = v;
                pick_cov = c;
            }
        }
        out.push_back(pick);
        g.closed_neighbor_set(pick).for_each([&](int x) { uncovered.reset(x); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<DominationWitness> domination_number(const Graph& g, std::optional<int> budget) {
    int n = g.vertex_count();
    int limit = std::min(budget.value_or(n), n);
    if (limit < 1) return std::nullopt;

    DominationSolver solver(g);
    auto found = solver.minimum(limit, greedy_dominating_set(g));
    if (found.empty()) return std::nullopt;

    // Rebuild the lexicographically smallest witness of minimum size.
    int size = static_cast<int>(found.size());
    std::vector<int> witness;
    int from = 0;
    while (static_cast<int>(witness.size()) < size) {
        for (int v = from; v < n; ++v) {
            witness.push_back(v);
            if (solver.feasible(witness, size)) {
                from = v + 1;
                break;
            }
            witness.pop_back();
        }
    }
    return DominationWitness{witness};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(keep.size()), edges, g.name());
}

Graph remove_vertex(const Graph& g, int u) {
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != u) keep.push_back(v);
    return induced_subgraph(g, keep);
}

}  // namespace pursuit
