#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/multiset_index.hpp"

namespace pursuit {

enum class GameKind { Classic, Attacking };
enum class Turn : uint8_t { Cops = 0, Robber = 1 };
enum class Side : uint8_t { Cops, Robber };

const char* to_string(GameKind g);

// Canonical game position: alive cops as a sorted multiset, robber vertex,
// side to move. A cop sharing the robber's vertex means the robber is caught.
struct GameState {
    std::vector<int> cops;  // sorted ascending
    int robber = 0;
    Turn to_move = Turn::Cops;
    bool operator==(const GameState&) const = default;
};

struct BudgetError : std::runtime_error {
    BudgetError(uint64_t required, uint64_t budget)
        : std::runtime_error("state budget exceeded: solve needs " + std::to_string(required) +
                             " states, budget is " + std::to_string(budget)),
          required(required),
          budget(budget) {}
    uint64_t required;
    uint64_t budget;
};

inline constexpr uint64_t kDefaultStateBudget = 100'000'000;

struct SolveOptions {
    uint64_t state_budget = kDefaultStateBudget;
    // Test hook: run the layered attacking machinery with attack transitions
    // replaced by classic moves. Must reproduce the classic labels.
    bool attack_moves = true;
};

// Cop placement together with the worst-case capture time over all robber
// replies.
struct Placement {
    std::vector<int> cops;
    uint32_t d0 = 0;
};

// Complete win/lose labeling with capture distances. Labels are cop moves to
// capture; kRobberWin marks states outside the least fixed point. The
// attacking game stores one layer per number of alive cops (0..k), the
// classic game only layer k.
class SolveTable {
  public:
    static constexpr uint32_t kRobberWin = 0xFFFFFFFFu;

    SolveTable(GameKind game, Graph graph, int k);

    GameKind game() const { return game_; }
    int k() const { return k_; }
    int n() const { return graph_.vertex_count(); }
    const Graph& graph() const { return graph_; }

    bool level_solved(int level) const { return !levels_[level].empty(); }
    uint32_t label(std::span<const int> sorted_cops, int robber, Turn t) const;
    bool cop_win(std::span<const int> sorted_cops, int robber, Turn t) const {
        return label(sorted_cops, robber, t) != kRobberWin;
    }

    uint64_t total_states() const;

    // Winning placements: cops pick a multiset, then the robber picks the
    // best reply vertex (placing on a cop is immediate capture). Returns the
    // placement minimizing worst-case capture time, ties broken by
    // lexicographically smallest multiset; nullopt when k cops lose.
    std::optional<Placement> best_placement() const;

    const MultisetIndex& index(int level) const { return index_[level]; }
    const std::vector<uint32_t>& raw_level(int level) const { return levels_[level]; }

  private:
    friend SolveTable solve_game(const Graph&, GameKind, int, const SolveOptions&);
    friend SolveTable read_solve_table(std::istream&);

    GameKind game_;
    Graph graph_;
    int k_;
    std::vector<MultisetIndex> index_;          // per level 0..k
    std::vector<std::vector<uint32_t>> levels_;  // per level 0..k; classic: only k
};

// Total states a solve must label: level k for the classic game, levels 0..k
// for the attacking game.
uint64_t required_states(const Graph& g, GameKind game, int k);

// Exact retrograde solves. Preconditions: connected graph, k >= 1, state
// count within options.state_budget (else BudgetError).
SolveTable solve_game(const Graph& g, GameKind game, int k, const SolveOptions& options = {});
SolveTable solve_classic(const Graph& g, int k, const SolveOptions& options = {});
SolveTable solve_attacking(const Graph& g, int k, const SolveOptions& options = {});

struct CopNumberResult {
    std::optional<int> value;  // nullopt: exceeds k_max
    std::optional<Placement> placement;
    uint64_t states_explored = 0;
    std::shared_ptr<const SolveTable> table;  // table for the reported k (or k_max)
};

// Smallest k <= k_max with a winning initial placement.
CopNumberResult cop_number(const Graph& g, int k_max, const SolveOptions& options = {});
CopNumberResult attacking_cop_number(const Graph& g, int k_max, const SolveOptions& options = {});

// Unoptimized independent oracle: iterate the one-step labeling rule over
// ordered cop tuples until stable. Guarded to n <= 12, k <= 2.
class NaiveTable {
  public:
    static constexpr uint32_t kRobberWin = 0xFFFFFFFFu;
    NaiveTable(GameKind game, int n, int k);
    uint32_t label(std::span<const int> cops, int robber, Turn t) const;
    GameKind game() const { return game_; }
    int k() const { return k_; }

    std::vector<std::vector<uint32_t>> levels;  // tuple-coded, per alive-cop count

  private:
    GameKind game_;
    int n_, k_;
};

NaiveTable naive_fixed_point(const Graph& g, int k, GameKind game);

// Recomputes every label from its successors in one pass; returns the number
// of mismatches (0 for a correct table).
uint64_t audit_solve_table(const SolveTable& table);

// Deterministic table-driven move choice. The cop side steps to a successor
// with minimal capture distance (ties: lexicographically smallest cop
// multiset); the robber side maximizes the capture distance, preferring
// robber-win successors (ties: smallest target vertex).
class Strategy {
  public:
    Strategy(const SolveTable& table, Side side) : table_(&table), side_(side) {}
    Side side() const { return side_; }
    const SolveTable& table() const { return *table_; }
    GameState choose(const GameState& s) const;

  private:
    const SolveTable* table_;
    Side side_;
};

Strategy extract_strategy(const SolveTable& table, Side side);

enum class Outcome { Capture, Escape };

struct TraceMove {
    int round = 0;  // 1-based; a round is one cop turn then one robber turn
    Turn side = Turn::Cops;
    std::vector<int> cops;  // position after the move
    int robber = 0;
    bool attack = false;
    int attacked_vertex = -1;
};

struct Trace {
    std::string graph_name;
    GameKind game = GameKind::Classic;
    std::vector<int> initial_cops;
    int initial_robber = 0;
    std::vector<TraceMove> moves;
    Outcome outcome = Outcome::Escape;
    int rounds = 0;  // cop moves played (capture happens on the last one)
};

// Referee: plays the strategies against each other from `start`, validating
// every move against closed neighborhoods and the attack bookkeeping.
// Throws std::runtime_error naming the round on an illegal move.
Trace play(const Graph& g, const Strategy& cop_strategy, const Strategy& robber_strategy,
           const GameState& start, int max_rounds);

std::string trace_to_json(const Trace& t);
std::string trace_to_dot(const Trace& t, const Graph& g);

// Binary table dump (documented in README: magic, game kind, n, k, per-level
// label counts, little-endian u32 labels).
void write_solve_table(const SolveTable& table, std::ostream& out);
SolveTable read_solve_table(std::istream& in);

}  // namespace pursuit
