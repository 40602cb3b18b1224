#include "regmatch/gallai_edmonds.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "regmatch/matching.h"

namespace regmatch {

GallaiEdmondsDecomposition gallai_edmonds(const Graph& graph) {
  GallaiEdmondsDecomposition out;
  const int n = graph.order();
  out.matching_number = matching_number(graph);
  std::vector<char> missable(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex removed[] = {v};
    if (matching_number(graph.without_vertices(removed)) == out.matching_number) {
      missable[v] = 1;
      out.missable.push_back(v);
    }
  }
  std::vector<char> barrier(n, 0);
  for (Vertex v : out.missable) {
    for (Vertex u : graph.neighbors(v)) {
      if (!missable[u]) barrier[u] = 1;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (barrier[v]) {
      out.barrier.push_back(v);
    } else if (!missable[v]) {
      out.rest.push_back(v);
    }
  }
  return out;
}

namespace {

// Appends to `out` the original labels of a factor-critical barrier of
// `graph`, whose vertex i is original vertex labels[i].
void collect_barrier(const Graph& graph, const std::vector<Vertex>& labels,
                     VertexSet& out) {
  const GallaiEdmondsDecomposition ge = gallai_edmonds(graph);
  for (Vertex a : ge.barrier) out.push_back(labels[a]);

  std::vector<Vertex> remaining_labels;
  {
    std::vector<char> in_barrier(graph.order(), 0);
    for (Vertex a : ge.barrier) in_barrier[a] = 1;
    for (Vertex v = 0; v < graph.order(); ++v) {
      if (!in_barrier[v]) remaining_labels.push_back(labels[v]);
    }
  }
  const Graph remaining = graph.without_vertices(ge.barrier);
  for (const auto& component : connected_components(remaining)) {
    const Graph piece = remaining.induced_subgraph(component);
    if (is_factor_critical(piece)) continue;
    // component is sorted, so piece vertex 0 is its lowest-indexed vertex.
    out.push_back(remaining_labels[component.front()]);
    std::vector<Vertex> rest_labels;
    for (std::size_t i = 1; i < component.size(); ++i) {
      rest_labels.push_back(remaining_labels[component[i]]);
    }
    const Vertex first[] = {0};
    collect_barrier(piece.without_vertices(first), rest_labels, out);
  }
}

}  // namespace

VertexSet factor_critical_barrier(const Graph& graph) {
  if (has_perfect_matching(graph)) {
    throw NoBarrierError("graph has a perfect matching");
  }
  std::vector<Vertex> labels(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) labels[v] = v;
  VertexSet barrier;
  collect_barrier(graph, labels, barrier);
  std::sort(barrier.begin(), barrier.end());

  const BarrierReport report = verify_barrier(graph, barrier);
  if (!report.passed()) {
    throw std::logic_error("constructed barrier failed verification");
  }
  return barrier;
}

std::vector<std::string> BarrierReport::failed_clauses() const {
  std::vector<std::string> out;
  if (!barrier_valid) out.emplace_back("barrier-set");
  if (!components_factor_critical) out.emplace_back("factor-critical");
  if (!matching_identity) out.emplace_back("matching-identity");
  if (!order_identity) out.emplace_back("order-identity");
  if (!component_count_identity) out.emplace_back("component-count");
  return out;
}

BarrierReport verify_barrier(const Graph& graph, const VertexSet& barrier,
                             std::optional<int> bound_m) {
  BarrierReport report;
  const int n = graph.order();
  report.order = n;
  report.matching_number = matching_number(graph);
  report.bound_m = bound_m.value_or(report.matching_number);

  std::vector<char> in_barrier(n, 0);
  for (Vertex v : barrier) {
    if (v < 0 || v >= n || in_barrier[v]) {
      report.barrier_valid = false;
      continue;
    }
    in_barrier[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_barrier[v]) report.barrier.push_back(v);
  }

  std::vector<Vertex> remaining_labels;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_barrier[v]) remaining_labels.push_back(v);
  }
  const Graph remaining = graph.without_vertices(report.barrier);
  long long order_sum = 0;
  long long half_sum2 = 0;
  for (const auto& component : connected_components(remaining)) {
    VertexSet original;
    for (Vertex v : component) original.push_back(remaining_labels[v]);
    const int d = static_cast<int>(component.size());
    if (!is_factor_critical(remaining.induced_subgraph(component))) {
      report.non_factor_critical.push_back(report.components.size());
    }
    report.components.push_back(std::move(original));
    report.component_orders.push_back(d);
    order_sum += d;
    half_sum2 += d - 1;
  }
  const long long s = report.s();
  report.components_factor_critical = report.non_factor_critical.empty();
  report.matching_identity_lhs2 = 2LL * report.matching_number;
  report.matching_identity_rhs2 = 2 * s + half_sum2;
  report.matching_identity =
      report.matching_identity_lhs2 == report.matching_identity_rhs2;
  report.order_identity = n == s + order_sum;
  report.component_count_gap =
      report.q() - (static_cast<long long>(n) - 2LL * report.bound_m + s);
  report.component_count_identity = report.component_count_gap == 0;
  return report;
}

TutteBergeResult tutte_berge_deficiency(const Graph& graph) {
  const int n = graph.order();
  if (n > kTutteBergeMaxOrder) {
    throw std::invalid_argument("Tutte-Berge sweep limited to " +
                                std::to_string(kTutteBergeMaxOrder) +
                                " vertices");
  }
  const std::vector<std::uint64_t> adj = graph.adjacency_masks();
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;

  TutteBergeResult best;
  best.order = n;
  best.deficiency = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t removed = 0; removed <= full; ++removed) {
    std::uint64_t unvisited = full & ~removed;
    int odd = 0;
    while (unvisited != 0) {
      std::uint64_t component = unvisited & (~unvisited + 1);
      std::uint64_t frontier = component;
      while (frontier != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = adj[v] & unvisited & ~component;
        component |= fresh;
        frontier |= fresh;
      }
      unvisited &= ~component;
      if (std::popcount(component) % 2 == 1) ++odd;
    }
    const int deficiency = odd - std::popcount(removed);
    if (deficiency > best.deficiency) {
      best.deficiency = deficiency;
      best_mask = removed;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1) best.maximizer.push_back(v);
  }
  return best;
}

}  // namespace regmatch
