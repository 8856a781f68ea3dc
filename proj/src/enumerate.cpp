#include "pursuit/enumerate.hpp"

#include <algorithm>
#include <map>

namespace pursuit {

namespace {

// Upper-triangle bit index of pair (u < v): (0,1)=0, (0,2)=1, (1,2)=2, ...
inline int pair_bit(int u, int v) {
    return v * (v - 1) / 2 + u;
}

// Depth-first search over vertex orderings, pruning whenever the partial bit
// string already exceeds the best one found. Pair bit i is packed at position
// 63-i, so placing one more vertex only decides lower-significance bits and a
// larger prefix can never complete below the incumbent. Ties have to be
// explored, so highly symmetric graphs cost more; fine at n <= 8.
class Canonicalizer {
  public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    uint64_t run() {
        best_known_ = false;
        perm_.assign(n_, -1);
        used_.assign(n_, false);
        extend(0, 0, 0);
        return best_;
    }

  private:
    const Graph& g_;
    int n_;
    uint64_t best_ = 0;
    bool best_known_ = false;
    std::vector<int> perm_;   // position -> original vertex
    std::vector<bool> used_;

    // bits: candidate string over pairs among the first `depth` positions.
    void extend(int depth, uint64_t bits, int nbits) {
        if (depth == n_) {
            if (!best_known_ || bits < best_) {
                best_ = bits;
                best_known_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            uint64_t next = bits;
            int next_bits = nbits;
            for (int pos = 0; pos < depth; ++pos) {
                if (g_.adjacent(perm_[pos], v))
                    next |= uint64_t{1} << (63 - pair_bit(pos, depth));
                ++next_bits;
            }
            if (best_known_ && next_bits > 0) {
                uint64_t mask = ~uint64_t{0} << (64 - next_bits);
                if ((next & mask) > (best_ & mask)) continue;
            }
            perm_[depth] = v;
            used_[v] = true;
            extend(depth + 1, next, next_bits);
            used_[v] = false;
        }
    }
};

std::vector<Graph> build_all(int n, const std::vector<Graph>& smaller) {
    std::map<uint64_t, Graph> seen;
    for (const Graph& g : smaller) {
        int base = g.vertex_count();
        auto base_edges = g.edges();
        for (uint32_t subset = 0; subset < (1u << base); ++subset) {
            std::vector<Edge> edges = base_edges;
            for (int v = 0; v < base; ++v)
                if (subset & (1u << v)) edges.emplace_back(v, base);
            Graph candidate(n, edges);
            uint64_t key = canonical_key(candidate);
            seen.emplace(key, std::move(candidate));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
    return out;
}

}  // namespace

uint64_t canonical_key(const Graph& g) {
    if (g.vertex_count() > 11)
        throw std::invalid_argument("canonical keys support at most 11 vertices");
    return Canonicalizer(g).run();
}

const std::vector<Graph>& all_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("graph enumeration supports 1 <= n <= 8");
    static std::vector<std::vector<Graph>> cache(9);
    if (!cache[n].empty()) return cache[n];
    if (n == 1) {
        cache[1].push_back(Graph(1, {}));
        return cache[1];
    }
    cache[n] = build_all(n, all_graphs(n - 1));
    return cache[n];
}

const std::vector<Graph>& connected_graphs(int n) {
    static std::vector<std::vector<Graph>> cache(9);
    if (n >= 1 && n <= 8 && !cache[n].empty()) return cache[n];
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    cache[n] = std::move(out);
    return cache[n];
}

}  // namespace pursuit
