#ifndef REGMATCH_GRAPH_H_
#define REGMATCH_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace regmatch {

using Vertex = int;

// An undirected edge, always stored with u < v. Build one through make_edge.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Orders the endpoints. Throws std::invalid_argument on a loop or a negative
// index.
Edge make_edge(Vertex a, Vertex b);

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// every operation that "changes" a graph returns a new value.
//
// Neighbor lists are kept sorted, so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on `order` vertices.
  explicit Graph(int order);

  // Throws std::invalid_argument on out-of-range endpoints, loops or repeated
  // edges.
  static Graph from_edges(int order, std::span<const Edge> edges);
  // Bit u of masks[v] marks the edge {u, v}. Requires masks.size() <= 64 and
  // a symmetric, loop-free mask matrix.
  static Graph from_adjacency_masks(std::span<const std::uint64_t> masks);
  // Rows are sorted on the way in; symmetry and loop-freedom are checked.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t edge_count() const { return edge_count_; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  // Lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;

  // Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
  Graph induced_subgraph(std::span<const Vertex> keep) const;
  // G - removed, remaining vertices relabelled in increasing order.
  Graph without_vertices(std::span<const Vertex> removed) const;

  // Order <= 64 only.
  std::vector<std::uint64_t> adjacency_masks() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adjacency);
  void check_invariants() const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::int64_t edge_count_ = 0;
};

// K_k, k >= 1.
Graph complete_graph(int k);
// C_k, k >= 3.
Graph cycle_graph(int k);
// Vertex i adjacent to i +- j (mod order) for every jump j. Requires an odd
// order >= 3 and distinct jumps with 1 <= j < order / 2.
Graph circulant_graph(int order, std::span<const int> jumps);
// Blockwise relabelling in input order; parts must be nonempty.
Graph disjoint_union(std::span<const Graph> parts);
// G + e. Throws if e is already an edge or out of range.
Graph with_edge(const Graph& graph, Edge e);
// Complement edges in lexicographic order.
std::vector<Edge> non_edges(const Graph& graph);
// d when every vertex has degree d. The edgeless graph is 0-regular; the
// order-0 graph has no degree.
std::optional<int> regular_degree(const Graph& graph);

// Connected components, each sorted ascending; components ordered by their
// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& graph);
bool is_connected(const Graph& graph);

// Undirected DOT document. `labels`, when given, must have one entry per
// vertex.
std::string to_dot(const Graph& graph,
                   const std::vector<std::string>* labels = nullptr);

}  // namespace regmatch

#endif  // REGMATCH_GRAPH_H_
