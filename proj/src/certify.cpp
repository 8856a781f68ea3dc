#include "pursuit/certify.hpp"

#include <algorithm>

#include "pursuit/constructions.hpp"

namespace pursuit {

bool cc_equals_one(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cc_equals_one needs a connected graph");
    return has_universal_vertex(g);
}

std::pair<bool, EliminationRecord> triangle_free_cc_at_most_2(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("triangle-free characterization needs a connected graph");
    if (!is_triangle_free(g))
        throw std::invalid_argument("characterization applies to triangle-free graphs only");

    EliminationRecord record;
    std::vector<int> alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;

    Graph current = g;
    if (gamma_at_most_2(current)) {
        record.final_n = current.vertex_count();
        record.gamma2_after = 0;
        record.succeeded = true;
        return {true, record};
    }
    while (true) {
        auto pair = find_dominated_vertex(current);
        if (!pair) break;
        record.order.push_back(alive[pair->dominated]);
        record.dominators.push_back(alive[pair->dominator]);
        alive.erase(alive.begin() + pair->dominated);
        current = remove_vertex(current, pair->dominated);
        if (gamma_at_most_2(current)) {
            record.final_n = current.vertex_count();
            record.gamma2_after = static_cast<int>(record.order.size());
            record.succeeded = true;
            return {true, record};
        }
    }
    record.final_n = current.vertex_count();
    return {false, record};
}

bool outerplanar_cc2_check(const Graph& g, const EmbeddingFaces& faces) {
    if (!is_connected(g))
        throw std::invalid_argument("outerplanar check needs a connected graph");
    if (has_universal_vertex(g))
        throw std::invalid_argument("outerplanar check excludes graphs with a universal vertex");
    for (const auto& face : faces.faces) {
        if (face.size() < 3) throw std::invalid_argument("a face needs at least three vertices");
        std::vector<int> sorted(face);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("a face may not repeat vertices");
        for (size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
                !g.adjacent(u, v))
                throw std::invalid_argument("a supplied face is not a cycle of the graph");
        }
    }
    int mid_faces = 0;
    for (const auto& face : faces.faces) {
        size_t len = face.size();
        if (len > 6) return false;
        if (len == 5 || len == 6) ++mid_faces;
    }
    return mid_faces <= 1;
}

const char* to_string(LemmaId id) {
    switch (id) {
        case LemmaId::Girth5: return "girth5";
        case LemmaId::Subdivision: return "subdivision";
        case LemmaId::Square: return "square";
    }
    return "?";
}

const char* to_string(GammaEvidenceKind kind) {
    switch (kind) {
        case GammaEvidenceKind::Exact: return "exact";
        case GammaEvidenceKind::ExceedsBudget: return "exceeds_budget";
        case GammaEvidenceKind::CeilingBound: return "ceil_n_over_maxdeg_plus_1";
    }
    return "?";
}

namespace {

int ceiling_bound(const Graph& g) {
    return (g.vertex_count() + degree_stats(g).second) / (degree_stats(g).second + 1);
}

// Evidence that gamma(g) > threshold: the ceiling bound when it suffices,
// otherwise exact search capped at threshold. nullopt when gamma <= threshold.
std::optional<GammaEvidence> gamma_above(const Graph& g, int threshold) {
    int ceiling = ceiling_bound(g);
    if (ceiling > threshold)
        return GammaEvidence{GammaEvidenceKind::CeilingBound, ceiling, {}};
    auto exact = domination_number(g, threshold);
    if (!exact) return GammaEvidence{GammaEvidenceKind::ExceedsBudget, threshold, {}};
    return std::nullopt;  // gamma <= threshold
}

}  // namespace

std::optional<Certificate> girth5_lower_bound(const Graph& g) {
    int gv = girth(g);
    auto [delta, Delta] = degree_stats(g);
    if (gv < 5) return std::nullopt;
    auto evidence = gamma_above(g, delta);
    if (!evidence) return std::nullopt;
    return Certificate{LemmaId::Girth5, g.name(), g.name(), gv, delta, *evidence, delta + 1};
}

std::optional<Certificate> subdivision_lower_bound(const Graph& g) {
    int gv = girth(g);
    auto [delta, Delta] = degree_stats(g);
    if (gv < 5) return std::nullopt;
    auto evidence = gamma_above(g, delta);
    if (!evidence) return std::nullopt;
    return Certificate{LemmaId::Subdivision, g.name(), "subdivide(" + g.name() + ")",
                       gv, delta, *evidence, delta + 1};
}

std::optional<Certificate> square_lower_bound(const Graph& g) {
    int gv = girth(g);
    auto [delta, Delta] = degree_stats(g);
    if (gv < 9 || delta < 3) return std::nullopt;
    Graph h = square_minus_edges(g);
    Certificate cert{LemmaId::Square, g.name(), h.name(), gv, delta, {}, 0};
    int twice = 2 * delta;
    int ceiling = ceiling_bound(h);
    if (ceiling >= twice) {
        cert.gamma = GammaEvidence{GammaEvidenceKind::CeilingBound, ceiling, {}};
        cert.bound = twice;
        return cert;
    }
    auto exact = domination_number(h, twice);
    if (!exact) {
        cert.gamma = GammaEvidence{GammaEvidenceKind::ExceedsBudget, twice, {}};
        cert.bound = twice;
        return cert;
    }
    cert.gamma = GammaEvidence{GammaEvidenceKind::Exact, exact->size(), exact->set};
    cert.bound = std::min(twice, exact->size());
    return cert;
}

bool validate_certificate(const Certificate& cert, const Graph& premise_graph) {
    const Graph& g = premise_graph;
    auto [delta, Delta] = degree_stats(g);
    if (cert.girth_value != girth(g) || cert.min_degree != delta) return false;

    auto gamma_evidence_holds = [](const Graph& target, const GammaEvidence& ev,
                                   int needs_above) {
        switch (ev.kind) {
            case GammaEvidenceKind::CeilingBound: {
                int ceiling = (target.vertex_count() + degree_stats(target).second) /
                              (degree_stats(target).second + 1);
                return ev.value == ceiling && ceiling > needs_above;
            }
            case GammaEvidenceKind::ExceedsBudget:
                return ev.value >= needs_above && !domination_number(target, ev.value).has_value();
            case GammaEvidenceKind::Exact: {
                auto exact = domination_number(target);
                return exact && exact->size() == ev.value;
            }
        }
        return false;
    };

    switch (cert.lemma) {
        case LemmaId::Girth5:
        case LemmaId::Subdivision:
            return cert.girth_value >= 5 && cert.bound == delta + 1 &&
                   gamma_evidence_holds(g, cert.gamma, delta);
        case LemmaId::Square: {
            if (cert.girth_value < 9 || delta < 3) return false;
            Graph h = square_minus_edges(g);
            int twice = 2 * delta;
            switch (cert.gamma.kind) {
                case GammaEvidenceKind::CeilingBound:
                    return gamma_evidence_holds(h, cert.gamma, twice - 1) && cert.bound == twice;
                case GammaEvidenceKind::ExceedsBudget:
                    return cert.gamma.value == twice && cert.bound == twice &&
                           gamma_evidence_holds(h, cert.gamma, twice - 1);
                case GammaEvidenceKind::Exact:
                    return gamma_evidence_holds(h, cert.gamma, 0) &&
                           cert.bound == std::min(twice, cert.gamma.value);
            }
            return false;
        }
    }
    return false;
}

BoundAuditReport bound_audit(const Graph& g, int k_max, const SolveOptions& options) {
    BoundAuditReport report;
    auto classic = cop_number(g, k_max, options);
    auto attacking = attacking_cop_number(g, k_max, options);
    if (!classic.value || !attacking.value)
        throw std::runtime_error("bound audit needs both numbers within k_max = " +
                                 std::to_string(k_max));
    auto gamma = domination_number(g);
    report.c = *classic.value;
    report.cc = *attacking.value;
    report.gamma = gamma->size();
    report.c_d0 = classic.placement->d0;
    report.cc_d0 = attacking.placement->d0;
    report.sandwich_ok =
        report.c <= report.cc && report.cc <= std::min(2 * report.c, report.gamma);
    report.cc1_iff_gamma1 = (report.cc == 1) == (report.gamma == 1);
    report.girth5 = girth5_lower_bound(g);
    report.girth5_tight = report.girth5 && report.girth5->bound == report.cc;
    return report;
}

}  // namespace pursuit
