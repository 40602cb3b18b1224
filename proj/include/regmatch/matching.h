#ifndef REGMATCH_MATCHING_H_
#define REGMATCH_MATCHING_H_

#include <span>
#include <vector>

#include "regmatch/graph.h"

namespace regmatch {

inline constexpr Vertex kUnmatched = -1;

// A set of pairwise vertex-disjoint edges over vertices 0..order-1. Edges are
// kept sorted lexicographically.
class Matching {
 public:
  Matching() = default;
  // Throws std::invalid_argument when two edges share a vertex or an endpoint
  // is out of range.
  Matching(int order, std::vector<Edge> edges);
  // mates[v] is v's partner or kUnmatched; must be an involution.
  static Matching from_mates(std::span<const Vertex> mates);

  int order() const { return static_cast<int>(mates_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> mates() const { return mates_; }
  Vertex mate(Vertex v) const { return mates_[v]; }
  bool covers(Vertex v) const { return mates_[v] != kUnmatched; }

  // True when the orders agree and every edge is an edge of `graph`.
  bool is_matching_of(const Graph& graph) const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
  std::vector<Vertex> mates_;
};

// Edmonds' blossom algorithm. Roots are tried in increasing order and
// neighbors are scanned in increasing order, so the result is reproducible.
Matching maximum_matching(const Graph& graph);
// Same, starting from `seed` (which must be a matching of `graph`) instead of
// the empty matching.
Matching maximum_matching(const Graph& graph, const Matching& seed);

int matching_number(const Graph& graph);
bool has_perfect_matching(const Graph& graph);
// G - v has a perfect matching for every v. False for the order-0 graph.
bool is_factor_critical(const Graph& graph);

}  // namespace regmatch

#endif  // REGMATCH_MATCHING_H_
