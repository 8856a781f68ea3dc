#include <algorithm>
#include <stdexcept>

#include "pursuit/solver.hpp"

namespace pursuit {

// Deliberately unoptimized second route: ordered cop tuples (no multiset
// ranking), forward successor enumeration, full sweeps until nothing
// changes. Shares only the Graph type with the production solver.

namespace {

uint64_t pow_u64(int base, int exp) {
    uint64_t v = 1;
    while (exp--) v *= static_cast<uint64_t>(base);
    return v;
}

struct NaiveGame {
    const Graph& g;
    GameKind kind;
    int n, k;
    std::vector<std::vector<uint32_t>>& levels;

    uint32_t& at(int level, uint64_t code, int r, int t) {
        return levels[level][(code * n + r) * 2 + t];
    }
    uint32_t get(int level, uint64_t code, int r, int t) const {
        return levels[level][(code * n + r) * 2 + t];
    }

    static bool tuple_contains(const std::vector<int>& tup, int v) {
        return std::find(tup.begin(), tup.end(), v) != tup.end();
    }

    std::vector<int> decode(uint64_t code, int level) const {
        std::vector<int> tup(level);
        for (int i = 0; i < level; ++i) {
            tup[i] = static_cast<int>(code % n);
            code /= n;
        }
        return tup;
    }

    uint64_t encode(const std::vector<int>& tup) const {
        uint64_t code = 0;
        for (int i = static_cast<int>(tup.size()) - 1; i >= 0; --i)
            code = code * n + tup[i];
        return code;
    }

    // One-step rule for a single state, reading current labels.
    uint32_t rule(int level, const std::vector<int>& cops, int r, int t) const {
        if (tuple_contains(cops, r)) return 0;
        if (t == static_cast<int>(Turn::Cops)) {
            uint32_t lo = NaiveTable::kRobberWin;
            std::vector<int> next(cops);
            // product over closed neighborhoods, rightmost varies fastest
            std::vector<size_t> pos(level, 0);
            auto closed = [&](int v) {
                std::vector<int> out(g.neighbors(v));
                out.push_back(v);
                return out;
            };
            std::vector<std::vector<int>> options;
            options.reserve(level);
            for (int c : cops) options.push_back(closed(c));
            while (true) {
                for (int i = 0; i < level; ++i) next[i] = options[i][pos[i]];
                lo = std::min(lo, get(level, encode(next), r, 1));
                int i = 0;
                while (i < level && ++pos[i] == options[i].size()) pos[i++] = 0;
                if (i == level) break;
            }
            return lo == NaiveTable::kRobberWin ? lo : lo + 1;
        }
        uint32_t hi = 0;
        std::vector<int> targets(g.neighbors(r));
        targets.push_back(r);
        for (int r2 : targets) {
            uint32_t lab;
            if (kind == GameKind::Attacking && tuple_contains(cops, r2)) {
                std::vector<int> fewer;
                bool removed = false;
                for (int c : cops) {
                    if (!removed && c == r2) {
                        removed = true;
                        continue;
                    }
                    fewer.push_back(c);
                }
                lab = get(level - 1, encode(fewer), r2, 0);
            } else {
                lab = get(level, encode(cops), r2, 0);
            }
            if (lab == NaiveTable::kRobberWin) return NaiveTable::kRobberWin;
            hi = std::max(hi, lab);
        }
        return hi;
    }

    void solve_level(int level) {
        uint64_t codes = pow_u64(n, level);
        levels[level].assign(codes * n * 2, NaiveTable::kRobberWin);
        bool changed = true;
        while (changed) {
            changed = false;
            for (uint64_t code = 0; code < codes; ++code) {
                std::vector<int> cops = decode(code, level);
                for (int r = 0; r < n; ++r)
                    for (int t = 0; t < 2; ++t) {
                        uint32_t v = rule(level, cops, r, t);
                        if (v != get(level, code, r, t)) {
                            at(level, code, r, t) = v;
                            changed = true;
                        }
                    }
            }
        }
    }
};

}  // namespace

NaiveTable::NaiveTable(GameKind game, int n, int k) : game_(game), n_(n), k_(k) {
    levels.resize(k + 1);
}

uint32_t NaiveTable::label(std::span<const int> cops, int robber, Turn t) const {
    int level = static_cast<int>(cops.size());
    if (level > k_ || levels[level].empty())
        throw std::logic_error("naive table layer not solved");
    uint64_t code = 0;
    for (int i = level - 1; i >= 0; --i) code = code * n_ + cops[i];
    return levels[level][(code * n_ + robber) * 2 + static_cast<int>(t)];
}

NaiveTable naive_fixed_point(const Graph& g, int k, GameKind game) {
    if (g.vertex_count() > 12 || k > 2)
        throw std::invalid_argument("naive oracle is guarded to n <= 12, k <= 2");
    if (k < 1) throw std::invalid_argument("need at least one cop");
    if (!is_connected(g)) throw std::invalid_argument("game solvers need a connected graph");

    NaiveTable table(game, g.vertex_count(), k);
    NaiveGame game_ctx{g, game, g.vertex_count(), k, table.levels};
    int from = game == GameKind::Attacking ? 0 : k;
    for (int level = from; level <= k; ++level) game_ctx.solve_level(level);
    return table;
}

}  // namespace pursuit
