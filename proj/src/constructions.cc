#include "regmatch/constructions.h"

#include <numeric>
#include <string>

#include "regmatch/matching.h"

namespace regmatch {

HamiltonDecomposition walecki_hamilton_decomposition(int k) {
  if (k < 1) throw std::invalid_argument("Walecki decomposition needs k >= 1");
  const int ring = 2 * k;
  const Vertex hub = ring;
  std::vector<Vertex> zigzag;
  zigzag.reserve(ring);
  zigzag.push_back(0);
  for (int i = 1; i <= k; ++i) {
    zigzag.push_back(i);
    if (i < k) zigzag.push_back(ring - i);
  }

  HamiltonDecomposition out;
  out.order = ring + 1;
  for (int shift = 0; shift < k; ++shift) {
    std::vector<Vertex> cycle;
    cycle.reserve(ring + 1);
    cycle.push_back(hub);
    for (Vertex z : zigzag) cycle.push_back((z + shift) % ring);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Graph cycles_union(int order, const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Edge> edges;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      edges.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
  }
  return Graph::from_edges(order, edges);
}

Graph rsat_extremal(int n, int m) {
  const ExtremalAnswer answer = rsat_matching(n, m);
  if (!answer.exists()) {
    throw NonexistentError(answer.reason(),
                           "no regular saturated graph for n=" + std::to_string(n) +
                               ", m=" + std::to_string(m) + ": " +
                               std::string(to_string(answer.reason())));
  }
  const int clique_order = static_cast<int>(answer.degree()) + 1;
  const std::vector<Graph> parts(n - 2 * m, complete_graph(clique_order));
  return disjoint_union(parts);
}

std::vector<int> odd_partition(int n, int m) {
  const int r = static_cast<int>(rex_degree(n, m));
  const int count = n - 2 * m;
  std::vector<int> parts(count - 1, r + 1);
  parts.push_back(n - (count - 1) * (r + 1));
  validate_partition(n, m, parts);
  return parts;
}

void validate_partition(int n, int m, const std::vector<int>& parts) {
  const int r = static_cast<int>(rex_degree(n, m));
  if (static_cast<int>(parts.size()) != n - 2 * m) {
    throw std::invalid_argument("partition needs exactly " +
                                std::to_string(n - 2 * m) + " parts");
  }
  for (int p : parts) {
    if (p % 2 == 0 || p < 1) {
      throw std::invalid_argument("partition part " + std::to_string(p) +
                                  " is not a positive odd number");
    }
    if (p < r + 1) {
      throw std::invalid_argument("partition part " + std::to_string(p) +
                                  " is smaller than r + 1 = " + std::to_string(r + 1));
    }
  }
  if (std::accumulate(parts.begin(), parts.end(), 0) != n) {
    throw std::invalid_argument("partition does not sum to " + std::to_string(n));
  }
}

Graph rex_extremal_cycles(int n, int m, const std::optional<std::vector<int>>& partition) {
  const int r = static_cast<int>(rex_degree(n, m));
  const std::vector<int> parts = partition.value_or(odd_partition(n, m));
  validate_partition(n, m, parts);
  if (r == 0) return Graph(n);

  std::vector<Graph> blocks;
  for (int p : parts) {
    HamiltonDecomposition hd = walecki_hamilton_decomposition((p - 1) / 2);
    hd.cycles.resize(r / 2);
    blocks.push_back(cycles_union(p, hd.cycles));
  }
  return disjoint_union(blocks);
}

Graph rex_extremal_clique_form(int n, int m) {
  const int r = static_cast<int>(rex_degree(n, m));
  if (r == 0) return Graph(n);
  const int cliques = n - 2 * m - 1;
  std::vector<Graph> blocks;
  blocks.push_back(factor_critical_regular(n - cliques * (r + 1), r));
  for (int i = 0; i < cliques; ++i) blocks.push_back(complete_graph(r + 1));
  return disjoint_union(blocks);
}

Graph factor_critical_regular(int order, int degree) {
  if (order % 2 == 0 || degree % 2 != 0 || degree <= 0 || degree >= order) {
    throw std::invalid_argument("factor-critical regular graph needs odd order, "
                                "even degree and 0 < degree < order (got order=" +
                                std::to_string(order) +
                                ", degree=" + std::to_string(degree) + ")");
  }
  std::vector<int> jumps(degree / 2);
  std::iota(jumps.begin(), jumps.end(), 1);
  Graph graph = circulant_graph(order, jumps);
  if (regular_degree(graph) != degree || !is_factor_critical(graph)) {
    throw std::logic_error("circulant failed its factor-critical regular check");
  }
  return graph;
}

}  // namespace regmatch
