#pragma once

#include <string>

#include "json.hpp"
#include "pursuit/certify.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

using Json = nlohmann::ordered_json;

// Fixed key order everywhere; identical inputs must yield byte-identical
// payloads (wall_ms is the one field determinism checks ignore).

Json graph_fields(const std::string& label, const Graph& g);

Json solve_report(const std::string& graph_label, const Graph& g, GameKind game, int max_cops,
                  const CopNumberResult& result, long long wall_ms);

Json budget_report(const std::string& command, const std::string& graph_label,
                   const BudgetError& err);

Json certificate_json(const Certificate& cert);

Json certify_report(const std::string& lemma, const std::string& graph_label, const Graph& g,
                    const std::optional<Certificate>& cert);

Json cc1_report(const std::string& graph_label, const Graph& g, bool holds);

Json cc2_report(const std::string& graph_label, const Graph& g, bool holds,
                const EliminationRecord& record);

Json construct_report(const std::string& op, const std::string& in_label,
                      const std::string& out_path, const std::string& format, const Graph& out);

Json audit_entry(const std::string& graph_label, const Graph& g, const BoundAuditReport& report);

std::string dump_json(const Json& j);

}  // namespace pursuit
