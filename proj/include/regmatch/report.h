#ifndef REGMATCH_REPORT_H_
#define REGMATCH_REPORT_H_

#include <string>

#include "json.hpp"
#include "regmatch/certification.h"
#include "regmatch/extremal.h"
#include "regmatch/gallai_edmonds.h"
#include "regmatch/graph.h"
#include "regmatch/oracle.h"

namespace regmatch {

// Structured forms. Field names are documented in README.md and are part of
// the CLI's output contract.
nlohmann::json to_json(const ExtremalAnswer& answer);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const SearchOutcome& outcome);
nlohmann::json to_json(const GallaiEdmondsDecomposition& ge);
nlohmann::json to_json(const BarrierReport& report);
// {"order", "edges": [[u, v], ...], "graph6", "regular_degree"}
nlohmann::json graph_to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& value);

// Line-oriented key=value forms.
std::string to_text(const ExtremalAnswer& answer);
std::string to_text(const Certificate& cert);
std::string to_text(const SearchOutcome& outcome);
std::string to_text(const GallaiEdmondsDecomposition& ge);
std::string to_text(const BarrierReport& report);

std::string format_vertex_set(const VertexSet& set);

}  // namespace regmatch

#endif  // REGMATCH_REPORT_H_
