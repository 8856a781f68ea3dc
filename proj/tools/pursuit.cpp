#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pursuit/constructions.hpp"
#include "pursuit/enumerate.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/report.hpp"

namespace {

using namespace pursuit;

constexpr int kExitInputError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitViolation = 3;

uint64_t default_budget() {
    if (const char* env = std::getenv("PURSUIT_BUDGET_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("PURSUIT_BUDGET_STATES must be a positive integer");
    }
    return kDefaultStateBudget;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        auto g = builtin_graph(spec.substr(8));
        if (!g) throw std::invalid_argument("unknown builtin graph " + spec.substr(8));
        return *g;
    }
    std::string text = read_file(spec);
    if (spec.size() >= 3 && spec.compare(spec.size() - 3, 3, ".g6") == 0) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph6(line).with_name(spec);
        throw std::invalid_argument("no graph6 line in " + spec);
    }
    return parse_edge_list(text).with_name(spec);
}

GameKind parse_game(const std::string& name) {
    if (name == "classic") return GameKind::Classic;
    if (name == "attacking") return GameKind::Attacking;
    throw std::invalid_argument("--game must be classic or attacking");
}

void write_output(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out.write(data.data(), static_cast<std::streamsize>(data.size())))
        throw std::invalid_argument("cannot write " + path);
}

int cmd_solve(const std::string& game_name, const std::string& graph_spec, int max_cops,
              uint64_t budget, const std::string& table_path, const std::string& trace_path,
              const std::string& trace_dot_path) {
    GameKind game = parse_game(game_name);
    Graph g = load_graph(graph_spec);
    SolveOptions options{.state_budget = budget};
    try {
        auto started = std::chrono::steady_clock::now();
        CopNumberResult result = game == GameKind::Classic
                                     ? cop_number(g, max_cops, options)
                                     : attacking_cop_number(g, max_cops, options);
        auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        std::cout << dump_json(solve_report(graph_spec, g, game, max_cops, result, wall_ms));
        if (!table_path.empty() && result.table) {
            std::ofstream out(table_path, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot write " + table_path);
            write_solve_table(*result.table, out);
        }
        if ((!trace_path.empty() || !trace_dot_path.empty()) && result.value) {
            const SolveTable& table = *result.table;
            // Optimal playout from the winning placement against the
            // longest-surviving robber reply.
            const auto& cops = result.placement->cops;
            int start_robber = 0;
            uint32_t worst = 0;
            for (int r = 0; r < g.vertex_count(); ++r) {
                uint32_t lab = table.label(cops, r, Turn::Cops);
                if (lab != SolveTable::kRobberWin && lab > worst) {
                    worst = lab;
                    start_robber = r;
                }
            }
            GameState start{cops, start_robber, Turn::Cops};
            Trace trace = play(g, extract_strategy(table, Side::Cops),
                               extract_strategy(table, Side::Robber), start,
                               static_cast<int>(result.placement->d0) + 2);
            if (!trace_path.empty()) write_output(trace_path, trace_to_json(trace));
            if (!trace_dot_path.empty()) write_output(trace_dot_path, trace_to_dot(trace, g));
        }
        return 0;
    } catch (const BudgetError& err) {
        std::cout << dump_json(budget_report("solve", graph_spec, err));
        std::cerr << "refusing to solve: " << err.what() << "\n";
        return kExitBudget;
    }
}

int cmd_certify(const std::string& lemma, const std::string& graph_spec) {
    Graph g = load_graph(graph_spec);
    if (lemma == "cc1") {
        std::cout << dump_json(cc1_report(graph_spec, g, cc_equals_one(g)));
        return 0;
    }
    if (lemma == "cc2-trianglefree") {
        auto [holds, record] = triangle_free_cc_at_most_2(g);
        std::cout << dump_json(cc2_report(graph_spec, g, holds, record));
        return 0;
    }
    std::optional<Certificate> cert;
    if (lemma == "girth5")
        cert = girth5_lower_bound(g);
    else if (lemma == "subdivision")
        cert = subdivision_lower_bound(g);
    else if (lemma == "square")
        cert = square_lower_bound(g);
    else
        throw std::invalid_argument("unknown lemma " + lemma);
    std::cout << dump_json(certify_report(lemma, graph_spec, g, cert));
    return 0;
}

int cmd_construct(const std::string& op, const std::string& in_spec, const std::string& out_path,
                  const std::string& format) {
    Graph g = load_graph(in_spec);
    Graph out = [&] {
        if (op == "subdivide") return subdivide_all_edges(g);
        if (op == "square-minus-e") return square_minus_edges(g);
        if (op == "line-graph") return line_graph(g);
        if (op == "copy") return g;
        throw std::invalid_argument("unknown construct op " + op);
    }();
    if (!out_path.empty()) {
        std::string data;
        if (format == "g6")
            data = encode_graph6(out) + "\n";
        else if (format == "edges")
            data = encode_edge_list(out);
        else if (format == "dot")
            data = encode_dot(out);
        else
            throw std::invalid_argument("unknown format " + format);
        write_output(out_path, data);
    }
    std::cout << dump_json(construct_report(op, in_spec, out_path, format, out));
    return 0;
}

int cmd_audit(const std::string& corpus, int max_cops, uint64_t budget) {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (corpus.rfind("small:", 0) == 0) {
        int n_max = std::stoi(corpus.substr(6));
        if (n_max < 1 || n_max > 8)
            throw std::invalid_argument("small:N corpora support 1 <= N <= 8");
        int index = 0;
        for (int n = 1; n <= n_max; ++n)
            for (const Graph& g : connected_graphs(n))
                graphs.emplace_back(corpus + "#" + std::to_string(index++), g);
    } else {
        std::istringstream in(read_file(corpus));
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            graphs.emplace_back(corpus + "#" + std::to_string(lineno), parse_graph6(line));
        }
    }
    if (graphs.empty()) throw std::invalid_argument("empty corpus " + corpus);

    SolveOptions options{.state_budget = budget};
    Json out;
    out["schema"] = 1;
    out["command"] = "audit";
    out["corpus"] = corpus;
    out["max_cops"] = max_cops;
    auto entries = Json::array();
    uint64_t violations = 0;
    size_t done = 0;
    for (const auto& [label, g] : graphs) {
        if (!is_connected(g))
            throw std::invalid_argument("audit corpus must contain connected graphs (" + label +
                                        ")");
        BoundAuditReport report = bound_audit(g, max_cops, options);
        if (!report.sandwich_ok || !report.cc1_iff_gamma1) ++violations;
        entries.push_back(audit_entry(label, g, report));
        if (++done % 200 == 0)
            std::cerr << "audit: " << done << "/" << graphs.size() << " graphs\n";
    }
    out["graphs"] = std::move(entries);
    out["violations"] = violations;
    std::cout << dump_json(out);
    std::cerr << "audit: " << graphs.size() << " graphs, " << violations << " violations\n";
    return violations == 0 ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and certificate toolkit for Cops and Robbers and "
                 "Cops and Attacking Robbers"};
    app.require_subcommand(1);

    std::string game, graph_spec, lemma, op = "copy", in_spec, out_path, format = "g6", corpus;
    std::string table_path, trace_path, trace_dot_path;
    int max_cops = 0;
    uint64_t budget = 0;

    auto* solve = app.add_subcommand("solve", "Compute a cop number by exact game solving");
    solve->add_option("--game", game, "classic or attacking")->required();
    solve->add_option("--graph", graph_spec, "builtin:NAME or a .g6/edge-list file")->required();
    solve->add_option("--max-cops", max_cops, "largest cop count to try")->required();
    solve->add_option("--budget", budget, "state budget override");
    solve->add_option("--table", table_path, "write the final solve table (binary)");
    solve->add_option("--trace", trace_path, "write an optimal playout (JSON)");
    solve->add_option("--trace-dot", trace_dot_path, "write an optimal playout (DOT frames)");

    auto* certify = app.add_subcommand("certify", "Emit structural-bound certificates");
    certify->add_option("--lemma", lemma, "girth5|subdivision|square|cc2-trianglefree|cc1")
        ->required();
    certify->add_option("--graph", graph_spec, "builtin:NAME or a .g6/edge-list file")->required();

    auto* construct = app.add_subcommand("construct", "Build derived graphs");
    construct->add_option("--op", op, "subdivide|square-minus-e|line-graph|copy");
    construct->add_option("--in", in_spec, "builtin:NAME or a .g6/edge-list file")->required();
    construct->add_option("--out", out_path, "output file");
    construct->add_option("--format", format, "g6|edges|dot");

    auto* audit = app.add_subcommand("audit", "Run the invariant suite over a corpus");
    audit->add_option("--corpus", corpus, "graph6 file or small:N")->required();
    audit->add_option("--max-cops", max_cops, "largest cop count to try")->required();
    audit->add_option("--budget", budget, "state budget override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget == 0) budget = default_budget();
        if (solve->parsed())
            return cmd_solve(game, graph_spec, max_cops, budget, table_path, trace_path,
                             trace_dot_path);
        if (certify->parsed()) return cmd_certify(lemma, graph_spec);
        if (construct->parsed()) return cmd_construct(op, in_spec, out_path, format);
        if (audit->parsed()) return cmd_audit(corpus, max_cops, budget);
    } catch (const BudgetError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
