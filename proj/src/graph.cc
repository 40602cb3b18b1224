#include "regmatch/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace regmatch {

Edge make_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("edge endpoint is negative");
  }
  if (a == b) {
    throw std::invalid_argument("loop edge " + std::to_string(a) + "-" +
                                std::to_string(b));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int order) {
  if (order < 0) throw std::invalid_argument("negative graph order");
  adjacency_.resize(order);
}

Graph::Graph(std::vector<std::vector<Vertex>> adjacency)
    : adjacency_(std::move(adjacency)) {
  std::int64_t degree_sum = 0;
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    degree_sum += static_cast<std::int64_t>(row.size());
  }
  edge_count_ = degree_sum / 2;
  check_invariants();
}

void Graph::check_invariants() const {
  const int n = order();
  std::int64_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& row = adjacency_[v];
    degree_sum += static_cast<std::int64_t>(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Vertex u = row[i];
      if (u < 0 || u >= n) {
        throw std::invalid_argument("neighbor index out of range");
      }
      if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
      if (i > 0 && row[i - 1] == u) {
        throw std::invalid_argument("repeated edge " + std::to_string(v) + "-" +
                                    std::to_string(u));
      }
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        throw std::invalid_argument("asymmetric adjacency");
      }
    }
  }
  if (degree_sum != 2 * edge_count_) {
    throw std::logic_error("edge count disagrees with degree sum");
  }
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  if (order < 0) throw std::invalid_argument("negative graph order");
  std::vector<std::vector<Vertex>> adjacency(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order || e.u >= e.v) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) +
                                  ") invalid for order " + std::to_string(order));
    }
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  return Graph(std::move(adjacency));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  return Graph(std::move(adjacency));
}

Graph Graph::from_adjacency_masks(std::span<const std::uint64_t> masks) {
  const int n = static_cast<int>(masks.size());
  if (n > 64) throw std::invalid_argument("mask adjacency limited to 64 vertices");
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& row = adjacency[v];
    row.reserve(std::popcount(masks[v]));
    for (std::uint64_t bits = masks[v]; bits != 0; bits &= bits - 1) {
      row.push_back(std::countr_zero(bits));
    }
  }
  return Graph(std::move(adjacency));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(adjacency_.size());
  for (Vertex v = 0; v < order(); ++v) out[v] = degree(v);
  return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> keep) const {
  std::vector<Vertex> relabel(adjacency_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Vertex v = keep[i];
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex out of range");
    if (relabel[v] != -1) throw std::invalid_argument("vertex listed twice");
    relabel[v] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adjacency(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex u : adjacency_[keep[i]]) {
      if (relabel[u] != -1) adjacency[i].push_back(relabel[u]);
    }
  }
  return Graph(std::move(adjacency));
}

Graph Graph::without_vertices(std::span<const Vertex> removed) const {
  std::vector<char> drop(adjacency_.size(), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex out of range");
    drop[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(keep);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (order() > 64) throw std::invalid_argument("mask adjacency limited to 64 vertices");
  std::vector<std::uint64_t> masks(adjacency_.size(), 0);
  for (Vertex v = 0; v < order(); ++v) {
    for (Vertex u : adjacency_[v]) masks[v] |= std::uint64_t{1} << u;
  }
  return masks;
}

Graph complete_graph(int k) {
  if (k < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<std::vector<Vertex>> adjacency(k);
  for (Vertex v = 0; v < k; ++v) {
    adjacency[v].reserve(k - 1);
    for (Vertex u = 0; u < k; ++u) {
      if (u != v) adjacency[v].push_back(u);
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) edges.push_back(make_edge(v, (v + 1) % k));
  return Graph::from_edges(k, edges);
}

Graph circulant_graph(int order, std::span<const int> jumps) {
  if (order < 3 || order % 2 == 0) {
    throw std::invalid_argument("circulant order must be odd and at least 3");
  }
  std::vector<int> sorted(jumps.begin(), jumps.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate circulant jump");
  }
  std::vector<std::vector<Vertex>> adjacency(order);
  for (int jump : sorted) {
    if (jump < 1 || 2 * jump >= order) {
      throw std::invalid_argument("circulant jump " + std::to_string(jump) +
                                  " outside 1.." + std::to_string(order / 2));
    }
    for (Vertex v = 0; v < order; ++v) {
      adjacency[v].push_back((v + jump) % order);
      adjacency[v].push_back((v - jump + order) % order);
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint union of no graphs");
  int total = 0;
  for (const Graph& g : parts) total += g.order();
  std::vector<std::vector<Vertex>> adjacency;
  adjacency.reserve(total);
  int offset = 0;
  for (const Graph& g : parts) {
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<Vertex> row;
      row.reserve(g.degree(v));
      for (Vertex u : g.neighbors(v)) row.push_back(u + offset);
      adjacency.push_back(std::move(row));
    }
    offset += g.order();
  }
  return Graph::from_adjacency(std::move(adjacency));
}

Graph with_edge(const Graph& graph, Edge e) {
  if (e.u < 0 || e.u >= e.v || e.v >= graph.order()) {
    throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") out of range");
  }
  if (graph.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") already present");
  }
  std::vector<std::vector<Vertex>> adjacency(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) {
    auto nbrs = graph.neighbors(v);
    adjacency[v].assign(nbrs.begin(), nbrs.end());
  }
  adjacency[e.u].push_back(e.v);
  adjacency[e.v].push_back(e.u);
  return Graph::from_adjacency(std::move(adjacency));
}

std::vector<Edge> non_edges(const Graph& graph) {
  std::vector<Edge> out;
  const std::int64_t n = graph.order();
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2 - graph.edge_count()));
  for (Vertex u = 0; u < graph.order(); ++u) {
    auto nbrs = graph.neighbors(u);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (Vertex v = u + 1; v < graph.order(); ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
      } else {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

std::optional<int> regular_degree(const Graph& graph) {
  if (graph.order() == 0) return std::nullopt;
  const int d = graph.degree(0);
  for (Vertex v = 1; v < graph.order(); ++v) {
    if (graph.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& graph) {
  std::vector<int> seen(graph.order(), 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < graph.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex u : graph.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

bool is_connected(const Graph& graph) {
  return connected_components(graph).size() <= 1;
}

std::string to_dot(const Graph& graph, const std::vector<std::string>* labels) {
  if (labels != nullptr && static_cast<int>(labels->size()) != graph.order()) {
    throw std::invalid_argument("one label per vertex required");
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < graph.order(); ++v) {
    out << "  " << v;
    if (labels != nullptr) {
      out << " [label=\"";
      for (char c : (*labels)[v]) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
      }
      out << "\"]";
    }
    out << ";\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace regmatch
