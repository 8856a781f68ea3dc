#include "pursuit/report.hpp"

namespace pursuit {

Json graph_fields(const std::string& label, const Graph& g) {
    Json j;
    j["graph"] = label;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    return j;
}

Json solve_report(const std::string& graph_label, const Graph& g, GameKind game, int max_cops,
                  const CopNumberResult& result, long long wall_ms) {
    Json j;
    j["schema"] = 1;
    j["command"] = "solve";
    j.update(graph_fields(graph_label, g));
    j["game"] = to_string(game);
    j["max_cops"] = max_cops;
    if (result.value) {
        j["value"] = *result.value;
        j["winning_placement"] = result.placement->cops;
        j["d0"] = result.placement->d0;
    } else {
        j["value"] = nullptr;
        j["winning_placement"] = nullptr;
        j["d0"] = nullptr;
    }
    j["exceeds_max_cops"] = !result.value.has_value();
    j["states_explored"] = result.states_explored;
    j["wall_ms"] = wall_ms;
    return j;
}

Json budget_report(const std::string& command, const std::string& graph_label,
                   const BudgetError& err) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["graph"] = graph_label;
    j["error"] = "state budget exceeded";
    j["required_states"] = err.required;
    j["budget_states"] = err.budget;
    return j;
}

Json certificate_json(const Certificate& cert) {
    Json j;
    j["lemma"] = to_string(cert.lemma);
    j["graph"] = cert.graph;
    j["target"] = cert.target;
    j["girth"] = cert.girth_value;
    j["min_degree"] = cert.min_degree;
    Json gamma;
    gamma["kind"] = to_string(cert.gamma.kind);
    gamma["value"] = cert.gamma.value;
    if (cert.gamma.kind == GammaEvidenceKind::Exact) gamma["witness"] = cert.gamma.witness;
    j["gamma"] = std::move(gamma);
    j["bound"] = cert.bound;
    return j;
}

Json certify_report(const std::string& lemma, const std::string& graph_label, const Graph& g,
                    const std::optional<Certificate>& cert) {
    Json j;
    j["schema"] = 1;
    j["command"] = "certify";
    j["lemma"] = lemma;
    j.update(graph_fields(graph_label, g));
    j["applies"] = cert.has_value();
    if (cert) j["certificate"] = certificate_json(*cert);
    return j;
}

Json cc1_report(const std::string& graph_label, const Graph& g, bool holds) {
    Json j;
    j["schema"] = 1;
    j["command"] = "certify";
    j["lemma"] = "cc1";
    j.update(graph_fields(graph_label, g));
    j["applies"] = true;
    j["holds"] = holds;
    return j;
}

Json cc2_report(const std::string& graph_label, const Graph& g, bool holds,
                const EliminationRecord& record) {
    Json j;
    j["schema"] = 1;
    j["command"] = "certify";
    j["lemma"] = "cc2-trianglefree";
    j.update(graph_fields(graph_label, g));
    j["applies"] = true;
    j["holds"] = holds;
    Json elim;
    elim["order"] = record.order;
    elim["dominators"] = record.dominators;
    elim["final_n"] = record.final_n;
    elim["gamma2_after"] = record.gamma2_after;
    j["elimination"] = std::move(elim);
    return j;
}

Json construct_report(const std::string& op, const std::string& in_label,
                      const std::string& out_path, const std::string& format, const Graph& out) {
    Json j;
    j["schema"] = 1;
    j["command"] = "construct";
    j["op"] = op;
    j["in"] = in_label;
    j["out"] = out_path.empty() ? Json(nullptr) : Json(out_path);
    j["format"] = format;
    j["n"] = out.vertex_count();
    j["m"] = out.edge_count();
    int gv = girth(out);
    j["girth"] = gv == kInfinity ? Json(nullptr) : Json(gv);
    auto [lo, hi] = degree_stats(out);
    j["min_degree"] = lo;
    j["max_degree"] = hi;
    j["bipartite"] = is_bipartite(out);
    j["connected"] = is_connected(out);
    return j;
}

Json audit_entry(const std::string& graph_label, const Graph& g, const BoundAuditReport& report) {
    Json j = graph_fields(graph_label, g);
    j["c"] = report.c;
    j["cc"] = report.cc;
    j["gamma"] = report.gamma;
    j["sandwich_ok"] = report.sandwich_ok;
    j["cc1_iff_gamma1"] = report.cc1_iff_gamma1;
    if (report.girth5) {
        j["girth5_bound"] = report.girth5->bound;
        j["girth5_tight"] = report.girth5_tight;
    } else {
        j["girth5_bound"] = nullptr;
        j["girth5_tight"] = nullptr;
    }
    return j;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace pursuit
