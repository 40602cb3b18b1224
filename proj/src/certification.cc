#include "regmatch/certification.h"

#include <stdexcept>

#include "regmatch/matching.h"

namespace regmatch {

bool is_matching_free(const Graph& graph, int m) {
  return matching_number(graph) <= m;
}

SaturationResult is_saturated_matching(const Graph& graph, int m) {
  SaturationResult out;
  const Matching base = maximum_matching(graph);
  out.matching_number = base.size();
  out.free = base.size() <= m;
  if (!out.free) return out;
  for (const Edge& e : non_edges(graph)) {
    // A maximum matching of G is still a matching of G + e, so the search only
    // has to look for one more augmenting path.
    const Graph extended = with_edge(graph, e);
    const int nu = maximum_matching(extended, Matching(extended.order(),
                                                       {base.edges().begin(),
                                                        base.edges().end()}))
                       .size();
    if (nu <= m) {
      out.witness = e;
      out.witness_matching_number = nu;
      return out;
    }
  }
  out.saturated = true;
  return out;
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kFree:
      return "free";
    case CertificateKind::kSaturated:
      return "saturated";
    case CertificateKind::kRsatExtremal:
      return "rsat-extremal";
    case CertificateKind::kRexExtremal:
      return "rex-extremal";
  }
  return "unknown";
}

std::optional<CertificateKind> parse_certificate_kind(std::string_view text) {
  for (auto kind : {CertificateKind::kFree, CertificateKind::kSaturated,
                    CertificateKind::kRsatExtremal, CertificateKind::kRexExtremal}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

bool Certificate::passed() const {
  for (const auto& check : checks) {
    if (!check.passed) return false;
  }
  return !checks.empty();
}

const CertificateCheck* Certificate::find(std::string_view name) const {
  for (const auto& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

namespace {

Certificate subject(CertificateKind kind, const Graph& graph, int m) {
  Certificate cert;
  cert.kind = kind;
  cert.order = graph.order();
  cert.edges = graph.edge_count();
  cert.regular_degree = regular_degree(graph);
  cert.bound_m = m;
  return cert;
}

void add_regular_check(Certificate& cert) {
  cert.checks.push_back(
      {"regular", cert.regular_degree.has_value(),
       cert.regular_degree ? "degree=" + std::to_string(*cert.regular_degree)
                           : std::string("degrees differ")});
}

void add_free_check(Certificate& cert, int nu) {
  cert.matching_number = nu;
  cert.checks.push_back({"free", nu <= cert.bound_m,
                         "nu=" + std::to_string(nu) +
                             " m=" + std::to_string(cert.bound_m)});
}

void add_saturation_checks(Certificate& cert, const Graph& graph) {
  const SaturationResult sat = is_saturated_matching(graph, cert.bound_m);
  add_free_check(cert, sat.matching_number);
  std::string detail;
  if (sat.saturated) {
    detail = "every non-edge raises nu to " + std::to_string(cert.bound_m + 1);
  } else if (!sat.free) {
    detail = "not free";
  } else {
    cert.witness = sat.witness;
    cert.witness_matching_number = sat.witness_matching_number;
    detail = "adding (" + std::to_string(sat.witness->u) + "," +
             std::to_string(sat.witness->v) + ") gives nu=" +
             std::to_string(*sat.witness_matching_number);
  }
  cert.checks.push_back({"saturated", sat.saturated, detail});
}

void add_size_check(Certificate& cert, const ExtremalAnswer& formula) {
  cert.formula = formula;
  if (!formula.exists()) {
    cert.checks.push_back(
        {"size", false, "formula: no graph (" + std::string(to_string(formula.reason())) + ")"});
    return;
  }
  cert.checks.push_back({"size", cert.edges == formula.edges(),
                         "edges=" + std::to_string(cert.edges) +
                             " formula=" + std::to_string(formula.edges())});
}

void check_order(const Graph& graph, int n) {
  if (graph.order() != n) {
    throw std::invalid_argument("graph order " + std::to_string(graph.order()) +
                                " does not match n=" + std::to_string(n));
  }
}

}  // namespace

Certificate certify_free(const Graph& graph, int m) {
  Certificate cert = subject(CertificateKind::kFree, graph, m);
  add_free_check(cert, matching_number(graph));
  return cert;
}

Certificate certify_saturated(const Graph& graph, int m) {
  Certificate cert = subject(CertificateKind::kSaturated, graph, m);
  add_saturation_checks(cert, graph);
  return cert;
}

Certificate certify_rsat_extremal(const Graph& graph, int n, int m) {
  check_order(graph, n);
  Certificate cert = subject(CertificateKind::kRsatExtremal, graph, m);
  add_regular_check(cert);
  add_saturation_checks(cert, graph);
  add_size_check(cert, rsat_matching(n, m));
  return cert;
}

Certificate certify_rex_extremal(const Graph& graph, int n, int m) {
  check_order(graph, n);
  const ExtremalAnswer formula = rex_matching(n, m);
  Certificate cert = subject(CertificateKind::kRexExtremal, graph, m);
  add_regular_check(cert);
  add_free_check(cert, matching_number(graph));
  add_size_check(cert, formula);
  return cert;
}

Certificate certify(CertificateKind kind, const Graph& graph, int m) {
  switch (kind) {
    case CertificateKind::kFree:
      return certify_free(graph, m);
    case CertificateKind::kSaturated:
      return certify_saturated(graph, m);
    case CertificateKind::kRsatExtremal:
      return certify_rsat_extremal(graph, graph.order(), m);
    case CertificateKind::kRexExtremal:
      return certify_rex_extremal(graph, graph.order(), m);
  }
  throw std::invalid_argument("unknown certificate kind");
}

}  // namespace regmatch
