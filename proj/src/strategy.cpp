#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

namespace {

std::vector<int> closed_targets(const Graph& g, int v) {
    std::vector<int> out(g.neighbors(v));
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

bool multiset_contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> remove_one(const std::vector<int>& sorted, int v) {
    std::vector<int> out;
    out.reserve(sorted.size() - 1);
    bool removed = false;
    for (int c : sorted) {
        if (!removed && c == v) {
            removed = true;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

// Is there a pairing of old cop positions to new ones with every step inside
// a closed neighborhood? Bitmask DP over the new positions.
bool one_step_reachable(const Graph& g, const std::vector<int>& from, const std::vector<int>& to) {
    if (from.size() != to.size()) return false;
    int k = static_cast<int>(from.size());
    std::vector<char> feasible(static_cast<size_t>(1) << k, 0);
    feasible[0] = 1;
    for (int i = 0; i < k; ++i) {
        std::vector<char> next(feasible.size(), 0);
        for (uint32_t used = 0; used < feasible.size(); ++used) {
            if (!feasible[used] || __builtin_popcount(used) != i) continue;
            for (int j = 0; j < k; ++j) {
                if (used & (1u << j)) continue;
                if (to[j] == from[i] || g.adjacent(from[i], to[j]))
                    next[used | (1u << j)] = 1;
            }
        }
        feasible.swap(next);
    }
    return feasible[(static_cast<size_t>(1) << k) - 1];
}

}  // namespace

GameState Strategy::choose(const GameState& s) const {
    const Graph& g = table_->graph();
    const bool attacking = table_->game() == GameKind::Attacking;
    if (multiset_contains(s.cops, s.robber))
        throw std::logic_error("no move from a terminal state");

    if (side_ == Side::Cops) {
        if (s.to_move != Turn::Cops) throw std::logic_error("not the cop turn");
        int k = static_cast<int>(s.cops.size());
        std::optional<std::pair<uint32_t, std::vector<int>>> best;
        std::vector<std::vector<int>> options;
        options.reserve(k);
        for (int c : s.cops) options.push_back(closed_targets(g, c));
        std::vector<size_t> pos(k, 0);
        std::vector<int> cand(k);
        while (true) {
            for (int i = 0; i < k; ++i) cand[i] = options[i][pos[i]];
            std::sort(cand.begin(), cand.end());
            uint32_t lab = table_->label(cand, s.robber, Turn::Robber);
            if (!best || lab < best->first || (lab == best->first && cand < best->second))
                best = {lab, cand};
            int i = 0;
            while (i < k && ++pos[i] == options[i].size()) pos[i++] = 0;
            if (i == k) break;
        }
        return GameState{best->second, s.robber, Turn::Robber};
    }

    if (s.to_move != Turn::Robber) throw std::logic_error("not the robber turn");
    // Highest capture distance wins for the robber; robber-win outranks all.
    std::optional<GameState> best;
    uint32_t best_lab = 0;
    bool best_is_win = false;
    for (int r2 : closed_targets(g, s.robber)) {
        GameState succ;
        uint32_t lab;
        if (attacking && multiset_contains(s.cops, r2)) {
            succ = GameState{remove_one(s.cops, r2), r2, Turn::Cops};
            lab = table_->label(succ.cops, r2, Turn::Cops);
        } else {
            succ = GameState{s.cops, r2, Turn::Cops};
            lab = table_->label(s.cops, r2, Turn::Cops);
        }
        bool win = lab == SolveTable::kRobberWin;
        if (!best || (win && !best_is_win) || (win == best_is_win && !win && lab > best_lab)) {
            best = std::move(succ);
            best_lab = lab;
            best_is_win = win;
        }
    }
    return *best;
}

Strategy extract_strategy(const SolveTable& table, Side side) {
    return Strategy(table, side);
}

Trace play(const Graph& g, const Strategy& cop_strategy, const Strategy& robber_strategy,
           const GameState& start, int max_rounds) {
    if (cop_strategy.side() != Side::Cops || robber_strategy.side() != Side::Robber)
        throw std::invalid_argument("strategies passed for the wrong sides");
    if (start.to_move != Turn::Cops)
        throw std::invalid_argument("playouts start on the cop turn");
    if (!std::is_sorted(start.cops.begin(), start.cops.end()))
        throw std::invalid_argument("cop multiset must be sorted");

    Trace trace;
    trace.graph_name = g.name();
    trace.game = cop_strategy.table().game();
    trace.initial_cops = start.cops;
    trace.initial_robber = start.robber;

    GameState state = start;
    if (multiset_contains(state.cops, state.robber)) {
        trace.outcome = Outcome::Capture;
        trace.rounds = 0;
        return trace;
    }

    for (int round = 1; round <= max_rounds; ++round) {
        // Cop turn.
        GameState next = cop_strategy.choose(state);
        if (next.robber != state.robber || next.to_move != Turn::Robber ||
            !one_step_reachable(g, state.cops, next.cops)) {
            throw std::runtime_error("illegal cop move in round " + std::to_string(round));
        }
        trace.moves.push_back({round, Turn::Cops, next.cops, next.robber, false, -1});
        state = std::move(next);
        trace.rounds = round;
        if (multiset_contains(state.cops, state.robber)) {
            trace.outcome = Outcome::Capture;
            return trace;
        }

        // Robber turn.
        next = robber_strategy.choose(state);
        bool attack = next.cops.size() + 1 == state.cops.size();
        if (next.to_move != Turn::Cops ||
            (next.robber != state.robber && !g.adjacent(state.robber, next.robber)))
            throw std::runtime_error("illegal robber move in round " + std::to_string(round));
        if (attack) {
            if (next.cops != remove_one(state.cops, next.robber) ||
                !multiset_contains(state.cops, next.robber))
                throw std::runtime_error("illegal attack in round " + std::to_string(round));
        } else if (next.cops != state.cops) {
            throw std::runtime_error("robber may not move the cops (round " +
                                     std::to_string(round) + ")");
        }
        trace.moves.push_back(
            {round, Turn::Robber, next.cops, next.robber, attack, attack ? next.robber : -1});
        state = std::move(next);
        if (multiset_contains(state.cops, state.robber)) {
            // Attacked a shared vertex or walked onto a cop: caught at once.
            trace.outcome = Outcome::Capture;
            return trace;
        }
    }
    trace.outcome = Outcome::Escape;
    return trace;
}

std::string trace_to_json(const Trace& t) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["graph"] = t.graph_name;
    j["game"] = to_string(t.game);
    j["initial_cops"] = t.initial_cops;
    j["initial_robber"] = t.initial_robber;
    j["outcome"] = t.outcome == Outcome::Capture ? "capture" : "escape";
    j["rounds"] = t.rounds;
    auto moves = nlohmann::ordered_json::array();
    for (const auto& m : t.moves) {
        nlohmann::ordered_json mj;
        mj["round"] = m.round;
        mj["side"] = m.side == Turn::Cops ? "cops" : "robber";
        mj["cops"] = m.cops;
        mj["robber"] = m.robber;
        if (m.attack) mj["attacked_vertex"] = m.attacked_vertex;
        moves.push_back(std::move(mj));
    }
    j["moves"] = std::move(moves);
    return j.dump(2) + "\n";
}

std::string trace_to_dot(const Trace& t, const Graph& g) {
    std::ostringstream out;
    auto frame = [&](int index, const std::vector<int>& cops, int robber, const char* note) {
        out << "graph frame" << index << " {\n";
        out << "  label=\"" << (index == 0 ? "placement" : "round " + std::to_string(index))
            << (note[0] ? std::string(" ") + note : "") << "\";\n";
        for (int v = 0; v < g.vertex_count(); ++v) {
            int ncops = static_cast<int>(std::count(cops.begin(), cops.end(), v));
            bool rob = robber == v;
            out << "  " << v << " [label=\"" << v;
            if (ncops) out << " C" << (ncops > 1 ? "x" + std::to_string(ncops) : "");
            if (rob) out << " R";
            out << "\"";
            if (ncops && rob)
                out << ", style=filled, fillcolor=orange";
            else if (ncops)
                out << ", style=filled, fillcolor=lightblue";
            else if (rob)
                out << ", style=filled, fillcolor=lightcoral";
            out << "];\n";
        }
        for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
    };
    frame(0, t.initial_cops, t.initial_robber, "");
    // One frame per round, after the robber's reply (or the closing cop move).
    int last_round = 0;
    std::vector<int> cops = t.initial_cops;
    int robber = t.initial_robber;
    std::string note;
    for (const auto& m : t.moves) {
        cops = m.cops;
        robber = m.robber;
        if (m.attack) note = "attack at " + std::to_string(m.attacked_vertex);
        if (m.side == Turn::Robber || &m == &t.moves.back()) {
            frame(m.round, cops, robber, note.c_str());
            note.clear();
            last_round = m.round;
        }
    }
    (void)last_round;
    return out.str();
}

}  // namespace pursuit
