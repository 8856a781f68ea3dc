#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

// True iff one cop suffices in the attacking game: exactly the graphs with a
// universal vertex. Requires a connected graph.
bool cc_equals_one(const Graph& g);

// Greedy domination elimination: the removal order, the dominator witness of
// each step, and where (if anywhere) the remainder first had gamma <= 2.
struct EliminationRecord {
    std::vector<int> order;       // removed vertices, original labels
    std::vector<int> dominators;  // per-step witness, original labels
    int final_n = 0;              // vertices left when the procedure stopped
    int gamma2_after = -1;        // removals after which gamma <= 2 held; -1 never
    bool succeeded = false;
};

// Decision procedure for triangle-free graphs with attacking cop number at
// most 2: gamma(g) <= 2, or some prefix of a greedy domination elimination
// ordering leaves a graph with gamma <= 2. Ties are broken by the smallest
// dominated vertex, then the smallest dominator, in the labels of the
// remaining graph. Throws on disconnected or non-triangle-free input.
std::pair<bool, EliminationRecord> triangle_free_cc_at_most_2(const Graph& g);

// Internal faces of a supplied outerplanar embedding; never computed here.
struct EmbeddingFaces {
    std::vector<std::vector<int>> faces;
};

// Face-size test deciding attacking cop number 2 for outerplanar graphs
// without a universal vertex: at most one internal 5- or 6-face and no
// internal face above 6. Validates that every supplied face is a cycle of g.
bool outerplanar_cc2_check(const Graph& g, const EmbeddingFaces& faces);

enum class LemmaId { Girth5, Subdivision, Square };
const char* to_string(LemmaId id);

enum class GammaEvidenceKind {
    Exact,          // value = exact domination number (witness included)
    ExceedsBudget,  // exact search proved gamma > value
    CeilingBound,   // value = ceil(n / (max degree + 1)) lower bound
};
const char* to_string(GammaEvidenceKind kind);

struct GammaEvidence {
    GammaEvidenceKind kind = GammaEvidenceKind::Exact;
    int value = 0;
    std::vector<int> witness;  // Exact only
};

// Machine-checkable record of a structural lower bound on the attacking cop
// number of `target`.
struct Certificate {
    LemmaId lemma = LemmaId::Girth5;
    std::string graph;   // premise graph
    std::string target;  // graph the bound applies to
    int girth_value = 0;
    int min_degree = 0;
    GammaEvidence gamma;  // evidence for the domination premise
    int bound = 0;        // concluded: attacking cop number of target >= bound
};

// Girth >= 5 and gamma > delta force bound delta+1 on the graph itself.
std::optional<Certificate> girth5_lower_bound(const Graph& g);

// Same premises; the bound applies to the graph with every edge subdivided.
std::optional<Certificate> subdivision_lower_bound(const Graph& g);

// Girth >= 9 and delta >= 3 force bound min(2*delta, gamma(H)) on
// H = square_minus_edges(g); gamma(H) may be certified by the ceiling bound.
std::optional<Certificate> square_lower_bound(const Graph& g);

// Recomputes the premises from the graph alone and checks the bound formula.
bool validate_certificate(const Certificate& cert, const Graph& premise_graph);

struct BoundAuditReport {
    int c = 0;
    int cc = 0;
    int gamma = 0;
    uint32_t c_d0 = 0;
    uint32_t cc_d0 = 0;
    bool sandwich_ok = false;      // c <= cc <= min(2c, gamma)
    bool cc1_iff_gamma1 = false;
    std::optional<Certificate> girth5;
    bool girth5_tight = false;
};

// Computes c, cc and gamma, asserts the sandwich, and reports whether the
// girth certificate applies and is tight. Throws BudgetError upward.
BoundAuditReport bound_audit(const Graph& g, int k_max, const SolveOptions& options = {});

}  // namespace pursuit
