#ifndef REGMATCH_GALLAI_EDMONDS_H_
#define REGMATCH_GALLAI_EDMONDS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regmatch/graph.h"

namespace regmatch {

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

// Canonical partition of V(G) by maximum-matching structure.
//   missable: vertices left exposed by at least one maximum matching
//   barrier:  neighbors of `missable` outside it
//   rest:     everything else (G[rest] has a perfect matching)
struct GallaiEdmondsDecomposition {
  VertexSet missable;
  VertexSet barrier;
  VertexSet rest;
  int matching_number = 0;
};

// v is missable iff nu(G - v) == nu(G); recomputed once per vertex.
GallaiEdmondsDecomposition gallai_edmonds(const Graph& graph);

class NoBarrierError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A vertex set S such that every component of G - S is factor-critical and
//   nu(G) = |S| + sum (d_i - 1) / 2
// over the component orders d_i. Starts from the Gallai-Edmonds barrier; each
// component that is not factor-critical loses its lowest-indexed vertex to S
// and the remainder is decomposed again. The result is re-verified before it
// is returned. Throws NoBarrierError when G has a perfect matching.
VertexSet factor_critical_barrier(const Graph& graph);

// Outcome of checking a candidate barrier S against the counting identities
//   (a) every component of G - S is factor-critical
//   (b) nu(G) = s + sum (d_i - 1) / 2
//   (c) n = s + sum d_i
//   (d) q = n - 2m + s, with m = nu(G) unless given
struct BarrierReport {
  int order = 0;
  int matching_number = 0;
  int bound_m = 0;
  VertexSet barrier;
  bool barrier_valid = true;  // in range, no repeats
  std::vector<VertexSet> components;
  std::vector<int> component_orders;
  std::vector<std::size_t> non_factor_critical;  // indices into components
  bool components_factor_critical = false;
  // Twice each side, so odd d_i never truncate.
  long long matching_identity_lhs2 = 0;  // 2 nu
  long long matching_identity_rhs2 = 0;  // 2 s + sum (d_i - 1)
  bool matching_identity = false;
  bool order_identity = false;
  long long component_count_gap = 0;  // q - (n - 2m + s)
  bool component_count_identity = false;

  int s() const { return static_cast<int>(barrier.size()); }
  int q() const { return static_cast<int>(components.size()); }
  bool passed() const {
    return barrier_valid && components_factor_critical && matching_identity &&
           order_identity && component_count_identity;
  }
  std::vector<std::string> failed_clauses() const;
};

BarrierReport verify_barrier(const Graph& graph, const VertexSet& barrier,
                             std::optional<int> bound_m = std::nullopt);

// max over U of (odd components of G - U) - |U|, by sweeping every subset.
struct TutteBergeResult {
  int deficiency = 0;
  VertexSet maximizer;  // first maximizer in increasing bitmask order
  int order = 0;

  // (n - deficiency) / 2
  int matching_number() const { return (order - deficiency) / 2; }
};

inline constexpr int kTutteBergeMaxOrder = 20;

// Throws std::invalid_argument above kTutteBergeMaxOrder vertices.
TutteBergeResult tutte_berge_deficiency(const Graph& graph);

}  // namespace regmatch

#endif  // REGMATCH_GALLAI_EDMONDS_H_
