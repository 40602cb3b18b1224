#include "regmatch/report.h"

#include <iomanip>
#include <sstream>

#include "regmatch/graph6.h"

namespace regmatch {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

std::string join_ints(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

const char* yes_no(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string format_vertex_set(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

json to_json(const ExtremalAnswer& answer) {
  if (!answer.exists()) {
    return {{"exists", false},
            {"edges", nullptr},
            {"degree", nullptr},
            {"reason", std::string(to_string(answer.reason()))}};
  }
  return {{"exists", true},
          {"edges", answer.edges()},
          {"degree", answer.degree()},
          {"reason", nullptr}};
}

json to_json(const Certificate& cert) {
  json checks = json::array();
  for (const auto& check : cert.checks) {
    checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  json witness = nullptr;
  if (cert.witness) {
    witness = {{"u", cert.witness->u},
               {"v", cert.witness->v},
               {"matching_number", optional_json(cert.witness_matching_number)}};
  }
  return {{"kind", std::string(to_string(cert.kind))},
          {"order", cert.order},
          {"edges", cert.edges},
          {"regular_degree", optional_json(cert.regular_degree)},
          {"m", cert.bound_m},
          {"matching_number", cert.matching_number},
          {"passed", cert.passed()},
          {"checks", checks},
          {"witness", witness},
          {"formula", cert.formula ? to_json(*cert.formula) : json(nullptr)}};
}

json to_json(const SearchOutcome& outcome) {
  json per_degree = json::array();
  for (const auto& d : outcome.per_degree) {
    per_degree.push_back({{"degree", d.degree},
                          {"examined", d.examined},
                          {"complete", d.complete},
                          {"found", d.found}});
  }
  return {{"target", std::string(to_string(outcome.target))},
          {"n", outcome.n},
          {"m", outcome.m},
          {"found", outcome.found()},
          {"edges", optional_json(outcome.edges)},
          {"degree", optional_json(outcome.degree)},
          {"exhaustive", outcome.exhaustive},
          {"proves_nonexistence", outcome.proves_nonexistence()},
          {"examined", outcome.examined},
          {"per_degree", per_degree},
          {"elapsed_seconds", outcome.elapsed_seconds},
          {"witness_graph6", outcome.witness ? json(to_graph6(*outcome.witness)) : json(nullptr)},
          {"note", outcome.note}};
}

json to_json(const GallaiEdmondsDecomposition& ge) {
  return {{"missable", ge.missable},
          {"barrier", ge.barrier},
          {"rest", ge.rest},
          {"matching_number", ge.matching_number}};
}

json to_json(const BarrierReport& report) {
  return {{"barrier", report.barrier},
          {"s", report.s()},
          {"q", report.q()},
          {"components", report.components},
          {"component_orders", report.component_orders},
          {"order", report.order},
          {"matching_number", report.matching_number},
          {"m", report.bound_m},
          {"clauses",
           {{"barrier_set", report.barrier_valid},
            {"factor_critical", report.components_factor_critical},
            {"matching_identity", report.matching_identity},
            {"order_identity", report.order_identity},
            {"component_count", report.component_count_identity}}},
          {"matching_identity_lhs2", report.matching_identity_lhs2},
          {"matching_identity_rhs2", report.matching_identity_rhs2},
          {"component_count_gap", report.component_count_gap},
          {"passed", report.passed()}};
}

json graph_to_json(const Graph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
  return {{"order", graph.order()},
          {"edges", edges},
          {"graph6", to_graph6(graph)},
          {"regular_degree", optional_json(regular_degree(graph))}};
}

Graph graph_from_json(const json& value) {
  std::vector<Edge> edges;
  for (const auto& e : value.at("edges")) {
    edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  }
  return Graph::from_edges(value.at("order").get<int>(), edges);
}

std::string to_text(const ExtremalAnswer& answer) {
  std::ostringstream out;
  if (answer.exists()) {
    out << "result=exists\nedges=" << answer.edges() << "\ndegree=" << answer.degree() << "\n";
  } else {
    out << "result=not-exist\nreason=" << to_string(answer.reason()) << "\n";
  }
  return out.str();
}

std::string to_text(const Certificate& cert) {
  std::ostringstream out;
  out << "kind=" << to_string(cert.kind) << "\n"
      << "order=" << cert.order << "\n"
      << "edges=" << cert.edges << "\n"
      << "regular_degree=" << (cert.regular_degree ? std::to_string(*cert.regular_degree) : "none")
      << "\n"
      << "m=" << cert.bound_m << "\n"
      << "nu=" << cert.matching_number << "\n";
  for (const auto& check : cert.checks) {
    out << "check." << check.name << "=" << (check.passed ? "pass" : "fail") << " ("
        << check.detail << ")\n";
  }
  if (cert.witness) {
    out << "witness=(" << cert.witness->u << "," << cert.witness->v << ")\n"
        << "witness_nu=" << *cert.witness_matching_number << "\n";
  }
  out << "verdict=" << (cert.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string to_text(const SearchOutcome& outcome) {
  std::ostringstream out;
  out << "target=" << to_string(outcome.target) << "\n"
      << "n=" << outcome.n << "\n"
      << "m=" << outcome.m << "\n";
  if (outcome.found()) {
    out << "answer=" << *outcome.edges << "\n"
        << "degree=" << *outcome.degree << "\n";
  } else if (outcome.proves_nonexistence()) {
    out << "answer=not-exist\n";
  } else {
    out << "answer=not-found-within-budget\n";
  }
  out << "exhaustive=" << yes_no(outcome.exhaustive) << "\n"
      << "examined=" << outcome.examined << "\n";
  for (const auto& d : outcome.per_degree) {
    out << "degree." << d.degree << "=examined:" << d.examined
        << " complete:" << yes_no(d.complete) << " found:" << yes_no(d.found) << "\n";
  }
  out << "elapsed_seconds=" << std::fixed << std::setprecision(3) << outcome.elapsed_seconds
      << "\n";
  if (!outcome.note.empty()) out << "note=" << outcome.note << "\n";
  return out.str();
}

std::string to_text(const GallaiEdmondsDecomposition& ge) {
  std::ostringstream out;
  out << "nu=" << ge.matching_number << "\n"
      << "D=" << format_vertex_set(ge.missable) << "\n"
      << "A=" << format_vertex_set(ge.barrier) << "\n"
      << "C=" << format_vertex_set(ge.rest) << "\n";
  return out.str();
}

std::string to_text(const BarrierReport& report) {
  std::ostringstream out;
  long long order_sum = 0;
  for (int d : report.component_orders) order_sum += d;
  out << "S=" << format_vertex_set(report.barrier) << "\n"
      << "s=" << report.s() << "\n"
      << "q=" << report.q() << "\n"
      << "d=" << join_ints(report.component_orders) << "\n"
      << "components_factor_critical=" << yes_no(report.components_factor_critical) << "\n"
      << "identity.nu=" << report.matching_identity_rhs2 << "/2 vs " << report.matching_number
      << " " << (report.matching_identity ? "ok" : "FAIL") << "\n"
      << "identity.order=" << report.s() << "+" << order_sum << " vs " << report.order << " "
      << (report.order_identity ? "ok" : "FAIL") << "\n"
      << "identity.components=q-(n-2m+s)=" << report.component_count_gap << " "
      << (report.component_count_identity ? "ok" : "FAIL") << "\n"
      << "witness_verdict=" << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace regmatch
