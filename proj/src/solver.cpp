#include "pursuit/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>

namespace pursuit {

namespace {

constexpr int kMaxCops = 12;

// Flattened sorted closed neighborhoods N[v] (pass included).
struct ClosedNeighborhoods {
    std::vector<int> flat;
    std::vector<int> off;

    explicit ClosedNeighborhoods(const Graph& g) {
        int n = g.vertex_count();
        off.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) off[v + 1] = off[v] + g.degree(v) + 1;
        flat.resize(off[n]);
        for (int v = 0; v < n; ++v) {
            int i = off[v];
            bool placed = false;
            for (int u : g.neighbors(v)) {
                if (!placed && v < u) {
                    flat[i++] = v;
                    placed = true;
                }
                flat[i++] = u;
            }
            if (!placed) flat[i++] = v;
        }
    }

    std::span<const int> operator[](int v) const {
        return {flat.data() + off[v], static_cast<size_t>(off[v + 1] - off[v])};
    }
};

inline void insertion_sort(int* a, int k) {
    for (int i = 1; i < k; ++i) {
        int x = a[i], j = i - 1;
        while (j >= 0 && a[j] > x) {
            a[j + 1] = a[j];
            --j;
        }
        a[j + 1] = x;
    }
}

// Retrograde solve of one layer of the game. States are indexed
// (rank * n + robber) * 2 + turn; turn 0 is cops-to-move. Labels are cop
// moves to capture, kRobberWin outside the least fixed point. A bucket queue
// keyed by label pops states in nondecreasing order; robber-move states hold
// a countdown of unlabeled successors. Attack transitions (robber steps onto
// a cop, one cop dies) lead into the already-final layer below and enter the
// queue as counter-decrement events scheduled at the successor's label.
class LayerSolver {
  public:
    LayerSolver(const Graph& g, const ClosedNeighborhoods& cn, const MultisetIndex& idx,
                bool attacks, const MultisetIndex* low_idx, const std::vector<uint32_t>* low)
        : g_(g), cn_(cn), idx_(idx), n_(g.vertex_count()), j_(idx.k()), attacks_(attacks),
          low_idx_(low_idx), low_(low) {}

    void run(std::vector<uint32_t>& d) {
        uint64_t m = idx_.count() * static_cast<uint64_t>(n_) * 2;
        d.assign(m, SolveTable::kRobberWin);
        counter_.assign(m / 2, 0);
        buckets_.clear();
        init(d);
        sweep(d);
        counter_.clear();
        counter_.shrink_to_fit();
        buckets_.clear();
        buckets_.shrink_to_fit();
    }

  private:
    static constexpr uint32_t kUnlabeled = SolveTable::kRobberWin;

    const Graph& g_;
    const ClosedNeighborhoods& cn_;
    const MultisetIndex& idx_;
    int n_, j_;
    bool attacks_;
    const MultisetIndex* low_idx_;
    const std::vector<uint32_t>* low_;

    std::vector<uint8_t> counter_;
    std::vector<std::vector<uint32_t>> buckets_;  // payload: (idx << 1) | is_decrement

    void push(uint32_t dval, uint32_t payload) {
        if (dval >= buckets_.size()) buckets_.resize(dval + 1);
        buckets_[dval].push_back(payload);
    }

    void init(std::vector<uint32_t>& d) {
        std::vector<int> cops(j_, 0);
        std::vector<uint64_t> mask((n_ + 63) / 64, 0);
        std::vector<int> reduced(j_ > 0 ? j_ - 1 : 0);
        uint64_t rank = 0;
        do {
            for (int c : cops) mask[c >> 6] |= uint64_t{1} << (c & 63);
            uint64_t row = rank * n_;
            for (int r = 0; r < n_; ++r) {
                uint32_t base = static_cast<uint32_t>((row + r) * 2);
                if ((mask[r >> 6] >> (r & 63)) & 1) {
                    // A cop shares the robber's vertex: captured either way.
                    d[base] = 0;
                    d[base + 1] = 0;
                    push(0, base << 1);
                    push(0, (base + 1) << 1);
                    continue;
                }
                counter_[row + r] = static_cast<uint8_t>(g_.degree(r) + 1);
                if (!attacks_ || j_ == 0) continue;
                for (int r2 : g_.neighbors(r)) {
                    if (!((mask[r2 >> 6] >> (r2 & 63)) & 1)) continue;
                    // Attack: one cop on r2 dies, robber stands on r2, cops
                    // move next at the layer below.
                    bool skipped = false;
                    int w = 0;
                    for (int c : cops) {
                        if (!skipped && c == r2) {
                            skipped = true;
                            continue;
                        }
                        reduced[w++] = c;
                    }
                    uint64_t low_rank = low_idx_->rank(std::span<const int>(reduced.data(), w));
                    uint32_t lab = (*low_)[(low_rank * n_ + r2) * 2];
                    if (lab != kUnlabeled)
                        push(lab, (static_cast<uint32_t>(row + r) << 1) | 1);
                    // A robber-win attack outcome never decrements: the
                    // counter stays positive and the state stays robber-win.
                }
            }
            for (int c : cops) mask[c >> 6] &= ~(uint64_t{1} << (c & 63));
            ++rank;
        } while (idx_.next(cops));
    }

    void decrement(uint32_t rob_sub, uint32_t dcur, std::vector<uint32_t>& d) {
        if (--counter_[rob_sub] == 0) {
            uint32_t i = rob_sub * 2 + 1;
            d[i] = dcur;
            push(dcur, i << 1);
        }
    }

    void sweep(std::vector<uint32_t>& d) {
        std::vector<int> cops(j_);
        std::array<int, kMaxCops> pos{};
        std::array<int, kMaxCops> sorted{};
        for (uint32_t dcur = 0; dcur < buckets_.size(); ++dcur) {
            auto& bucket = buckets_[dcur];
            for (size_t qi = 0; qi < bucket.size(); ++qi) {
                uint32_t payload = bucket[qi];
                if (payload & 1) {
                    decrement(payload >> 1, dcur, d);
                    continue;
                }
                uint32_t sidx = payload >> 1;
                int turn = sidx & 1;
                uint32_t pair = sidx >> 1;
                uint64_t rank = pair / n_;
                int r = pair % n_;
                idx_.unrank(rank, cops);
                if (turn == static_cast<int>(Turn::Robber)) {
                    // Predecessors: cops-to-move states one cop step away.
                    if (j_ == 0) continue;
                    pos.fill(0);
                    while (true) {
                        for (int i = 0; i < j_; ++i) sorted[i] = cn_[cops[i]][pos[i]];
                        insertion_sort(sorted.data(), j_);
                        uint64_t prank = idx_.rank(std::span<const int>(sorted.data(), j_));
                        uint32_t pi = static_cast<uint32_t>((prank * n_ + r) * 2);
                        if (d[pi] == kUnlabeled) {
                            d[pi] = dcur + 1;
                            push(dcur + 1, pi << 1);
                        }
                        int i = 0;
                        while (i < j_) {
                            if (++pos[i] < static_cast<int>(cn_[cops[i]].size())) break;
                            pos[i] = 0;
                            ++i;
                        }
                        if (i == j_) break;
                    }
                } else {
                    // Predecessors: robber-to-move states that step to r.
                    bool terminal = std::binary_search(cops.begin(), cops.end(), r);
                    if (terminal && attacks_) continue;  // stepping on a cop attacks instead
                    uint64_t row = rank * n_;
                    for (int rp : cn_[r]) {
                        if (std::binary_search(cops.begin(), cops.end(), rp)) continue;
                        decrement(static_cast<uint32_t>(row + rp), dcur, d);
                    }
                }
            }
            bucket.clear();
            bucket.shrink_to_fit();
        }
    }
};

void check_solvable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("need at least one cop");
    if (k > kMaxCops) throw std::invalid_argument("more than 12 cops are not supported");
    if (!is_connected(g)) throw std::invalid_argument("game solvers need a connected graph");
    if (degree_stats(g).second > 254)
        throw std::invalid_argument("vertex degrees above 254 are not supported");
}

}  // namespace

const char* to_string(GameKind g) {
    return g == GameKind::Classic ? "classic" : "attacking";
}

SolveTable::SolveTable(GameKind game, Graph graph, int k)
    : game_(game), graph_(std::move(graph)), k_(k) {
    index_.reserve(k + 1);
    for (int j = 0; j <= k; ++j) index_.emplace_back(graph_.vertex_count(), j);
    levels_.resize(k + 1);
}

uint32_t SolveTable::label(std::span<const int> sorted_cops, int robber, Turn t) const {
    int level = static_cast<int>(sorted_cops.size());
    if (level > k_) throw std::invalid_argument("more cops than the solved table holds");
    if (levels_[level].empty()) throw std::logic_error("layer not solved (classic tables hold only layer k)");
    assert(std::is_sorted(sorted_cops.begin(), sorted_cops.end()));
    uint64_t rank = index_[level].rank(sorted_cops);
    return levels_[level][(rank * graph_.vertex_count() + robber) * 2 + static_cast<int>(t)];
}

uint64_t SolveTable::total_states() const {
    uint64_t total = 0;
    for (const auto& level : levels_) total += level.size();
    return total;
}

std::optional<Placement> SolveTable::best_placement() const {
    const auto& top = levels_[k_];
    if (top.empty()) return std::nullopt;
    int n = graph_.vertex_count();
    std::vector<int> cops(k_, 0);
    std::optional<Placement> best;
    uint64_t rank = 0;
    do {
        uint64_t row = rank * n;
        uint32_t worst = 0;
        bool wins = true;
        for (int r = 0; r < n; ++r) {
            uint32_t lab = top[(row + r) * 2];
            if (lab == kRobberWin) {
                wins = false;
                break;
            }
            worst = std::max(worst, lab);
        }
        if (wins && (!best || worst < best->d0 || (worst == best->d0 && cops < best->cops)))
            best = Placement{cops, worst};
        ++rank;
    } while (index_[k_].next(cops));
    return best;
}

uint64_t required_states(const Graph& g, GameKind game, int k) {
    uint64_t n = g.vertex_count();
    uint64_t total = 0;
    int from = game == GameKind::Attacking ? 0 : k;
    for (int j = from; j <= k; ++j) {
        uint64_t msets = multiset_count_clamped(n, j);
        if (msets == std::numeric_limits<uint64_t>::max()) return msets;
        unsigned __int128 states = static_cast<unsigned __int128>(msets) * n * 2;
        if (total + states > std::numeric_limits<uint64_t>::max())
            return std::numeric_limits<uint64_t>::max();
        total += static_cast<uint64_t>(states);
    }
    return total;
}

SolveTable solve_game(const Graph& g, GameKind game, int k, const SolveOptions& options) {
    check_solvable(g, k);
    // 32-bit state indexing is a hard implementation ceiling.
    uint64_t budget = std::min<uint64_t>(options.state_budget, (uint64_t{1} << 31) - 1);
    uint64_t required = required_states(g, game, k);
    if (required > budget) throw BudgetError(required, budget);

    SolveTable table(game, g, k);
    ClosedNeighborhoods cn(g);
    bool attacks = game == GameKind::Attacking && options.attack_moves;
    int from = game == GameKind::Attacking ? 0 : k;
    for (int j = from; j <= k; ++j) {
        const MultisetIndex* low_idx = j > 0 ? &table.index_[j - 1] : nullptr;
        const std::vector<uint32_t>* low = j > from ? &table.levels_[j - 1] : nullptr;
        LayerSolver layer(g, cn, table.index_[j], attacks && low != nullptr, low_idx, low);
        layer.run(table.levels_[j]);
    }
    return table;
}

SolveTable solve_classic(const Graph& g, int k, const SolveOptions& options) {
    return solve_game(g, GameKind::Classic, k, options);
}

SolveTable solve_attacking(const Graph& g, int k, const SolveOptions& options) {
    return solve_game(g, GameKind::Attacking, k, options);
}

namespace {

CopNumberResult cop_number_impl(const Graph& g, GameKind game, int k_max,
                                const SolveOptions& options) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    CopNumberResult result;
    for (int k = 1; k <= k_max; ++k) {
        auto table = std::make_shared<SolveTable>(solve_game(g, game, k, options));
        result.states_explored += table->total_states();
        auto placement = table->best_placement();
        result.table = table;
        if (placement) {
            result.value = k;
            result.placement = std::move(placement);
            return result;
        }
    }
    return result;  // value empty: exceeds k_max
}

}  // namespace

CopNumberResult cop_number(const Graph& g, int k_max, const SolveOptions& options) {
    return cop_number_impl(g, GameKind::Classic, k_max, options);
}

CopNumberResult attacking_cop_number(const Graph& g, int k_max, const SolveOptions& options) {
    return cop_number_impl(g, GameKind::Attacking, k_max, options);
}

uint64_t audit_solve_table(const SolveTable& table) {
    const Graph& g = table.graph();
    int n = g.vertex_count();
    ClosedNeighborhoods cn(g);
    bool attacks = table.game() == GameKind::Attacking;
    uint64_t mismatches = 0;

    int from = attacks ? 0 : table.k();
    std::array<int, kMaxCops> pos{};
    std::array<int, kMaxCops> sorted{};
    for (int j = from; j <= table.k(); ++j) {
        const auto& d = table.raw_level(j);
        const MultisetIndex& idx = table.index(j);
        std::vector<int> cops(j, 0);
        std::vector<int> reduced(j > 0 ? j - 1 : 0);
        uint64_t rank = 0;
        do {
            uint64_t row = rank * n;
            for (int r = 0; r < n; ++r) {
                bool caught = std::binary_search(cops.begin(), cops.end(), r);
                for (int t = 0; t < 2; ++t) {
                    uint32_t stored = d[(row + r) * 2 + t];
                    uint32_t expect;
                    if (caught) {
                        expect = 0;
                    } else if (t == static_cast<int>(Turn::Cops)) {
                        // Best cop reply: one step per cop.
                        uint32_t lo = SolveTable::kRobberWin;
                        pos.fill(0);
                        while (true) {
                            for (int i = 0; i < j; ++i) sorted[i] = cn[cops[i]][pos[i]];
                            insertion_sort(sorted.data(), j);
                            uint64_t srank = idx.rank(std::span<const int>(sorted.data(), j));
                            lo = std::min(lo, d[(srank * n + r) * 2 + 1]);
                            int i = 0;
                            while (i < j) {
                                if (++pos[i] < static_cast<int>(cn[cops[i]].size())) break;
                                pos[i] = 0;
                                ++i;
                            }
                            if (i == j) break;
                        }
                        expect = lo == SolveTable::kRobberWin ? lo : lo + 1;
                    } else {
                        // Every robber reply must lose for a cop win.
                        uint32_t hi = 0;
                        for (int r2 : cn[r]) {
                            uint32_t lab;
                            bool on_cop = std::binary_search(cops.begin(), cops.end(), r2);
                            if (on_cop && attacks) {
                                bool skipped = false;
                                int w = 0;
                                for (int c : cops) {
                                    if (!skipped && c == r2) {
                                        skipped = true;
                                        continue;
                                    }
                                    reduced[w++] = c;
                                }
                                lab = table.label(std::span<const int>(reduced.data(), w), r2,
                                                  Turn::Cops);
                            } else {
                                lab = d[(row + r2) * 2];
                            }
                            hi = lab == SolveTable::kRobberWin ? SolveTable::kRobberWin
                                                               : std::max(hi, lab);
                            if (hi == SolveTable::kRobberWin) break;
                        }
                        expect = hi;
                    }
                    if (stored != expect) ++mismatches;
                }
            }
            ++rank;
        } while (idx.next(cops));
    }
    return mismatches;
}

}  // namespace pursuit
