#ifndef REGMATCH_CONSTRUCTIONS_H_
#define REGMATCH_CONSTRUCTIONS_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "regmatch/extremal.h"
#include "regmatch/graph.h"

namespace regmatch {

// Requested an extremal graph for an (n, m) where none exists.
class NonexistentError : public std::invalid_argument {
 public:
  NonexistentError(NonexistenceReason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  NonexistenceReason reason() const { return reason_; }

 private:
  NonexistenceReason reason_;
};

// k edge-disjoint Hamilton cycles of K_{2k+1}. Each cycle lists its 2k + 1
// vertices in traversal order (the closing edge back to the first vertex is
// implicit).
struct HamiltonDecomposition {
  int order = 0;
  std::vector<std::vector<Vertex>> cycles;
};

// Walecki's construction: vertex 2k is the hub, 0..2k-1 carry the zigzag
// 0, 1, -1, 2, -2, ..., k (mod 2k), and cycle j is the hub followed by the
// zigzag shifted by j. Requires k >= 1.
HamiltonDecomposition walecki_hamilton_decomposition(int k);

// Union of the given cycles as a graph on `order` vertices.
Graph cycles_union(int order, const std::vector<std::vector<Vertex>>& cycles);

// (n - 2m) disjoint copies of K_{2m/(n-2m) + 1}. Throws NonexistentError
// when rsat_matching(n, m) reports no graph.
Graph rsat_extremal(int n, int m);

// n - 2m odd parts summing to n, each at least r + 1 for r = rex_degree(n, m):
// (n - 2m - 1) parts of size r + 1, then the remainder.
std::vector<int> odd_partition(int n, int m);

// Throws std::invalid_argument describing the first violated condition.
void validate_partition(int n, int m, const std::vector<int>& parts);

// Per part 2r_i + 1: the first r/2 Walecki cycles of K_{2r_i+1}; disjoint
// union over parts in order. The edgeless graph when r = 0.
Graph rex_extremal_cycles(int n, int m,
                          const std::optional<std::vector<int>>& partition = std::nullopt);

// An r-regular factor-critical graph of order n - (n - 2m - 1)(r + 1),
// followed by n - 2m - 1 copies of K_{r+1}. The edgeless graph when r = 0.
Graph rex_extremal_clique_form(int n, int m);

// Circulant on `order` vertices with jumps 1..degree/2, re-verified to be
// degree-regular and factor-critical. Requires odd order, even degree,
// 0 < degree < order.
Graph factor_critical_regular(int order, int degree);

}  // namespace regmatch

#endif  // REGMATCH_CONSTRUCTIONS_H_
