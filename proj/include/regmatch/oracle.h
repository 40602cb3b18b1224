#ifndef REGMATCH_ORACLE_H_
#define REGMATCH_ORACLE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "regmatch/graph.h"

namespace regmatch {

inline constexpr int kOracleMaxOrder = 10;

// Adjacency of an enumerated graph: bit u of masks[v] marks edge {u, v}.
using AdjacencyMasks = std::span<const std::uint64_t>;

struct EnumerationOptions {
  // Only emit graphs in which vertex 0 is adjacent to exactly 1..r. Every
  // isomorphism class still appears at least once, so this is sound for
  // "does some r-regular graph have property P" questions and for nothing
  // that counts or lists labeled graphs.
  bool fix_first_neighborhood = false;
};

// Visits every labeled r-regular graph on n vertices exactly once. Vertices
// are processed in index order; each picks its missing neighbors among higher
// vertices (subsets in lexicographic order). Stops early when `visit` returns
// false. Returns the number of graphs visited.
//
// n*r odd yields no graphs. Throws std::invalid_argument for n outside
// 1..kOracleMaxOrder or r outside 0..n-1.
std::uint64_t enumerate_regular(int n, int r, const EnumerationOptions& options,
                                const std::function<bool(AdjacencyMasks)>& visit);
std::vector<Graph> regular_graphs(int n, int r, const EnumerationOptions& options = {});

struct SweepOptions {
  EnumerationOptions enumeration;
  int threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool stop_at_first = true;
};

// Result of scanning one (n, r) stream with a predicate.
struct SweepResult {
  std::uint64_t examined = 0;
  bool complete = true;  // false when the deadline cut the sweep short
  // Masks of accepted graphs in sequential enumeration order (at most one
  // when stop_at_first).
  std::vector<std::vector<std::uint64_t>> hits;
};

// The stream is split after the first free branching vertex and the pieces
// are handed to `threads` workers. Hits and the examined count match a
// sequential run whenever the sweep completes.
SweepResult sweep_regular(int n, int r, const SweepOptions& options,
                          const std::function<bool(AdjacencyMasks)>& accept);

enum class SearchTarget { kRsat, kRex };
std::string_view to_string(SearchTarget target);

struct DegreeStats {
  int degree = 0;
  std::uint64_t examined = 0;
  bool complete = true;
  bool found = false;
};

struct SearchOutcome {
  SearchTarget target = SearchTarget::kRsat;
  int n = 0;
  int m = 0;
  std::optional<std::int64_t> edges;
  std::optional<int> degree;
  std::optional<Graph> witness;
  std::uint64_t examined = 0;
  std::vector<DegreeStats> per_degree;
  double elapsed_seconds = 0;
  // Every degree that could beat the answer was swept completely.
  bool exhaustive = true;
  std::string note;

  bool found() const { return edges.has_value(); }
  // Nonexistence is only claimed after a complete sweep.
  bool proves_nonexistence() const { return !found() && exhaustive; }
};

struct OracleOptions {
  std::optional<std::chrono::duration<double>> budget;
  int threads = 1;
  bool fix_first_neighborhood = true;
};

// Smallest e(G) over regular n-vertex graphs with nu(G) <= m that gain a
// matching of size m + 1 from any added edge. Degrees are tried in increasing
// order, so the first hit is optimal. For n <= 2m + 1 no graph on n vertices
// contains m + 1 disjoint edges and the answer is nonexistence without a
// search. Throws std::invalid_argument for n outside 2..kOracleMaxOrder.
SearchOutcome oracle_rsat(int n, int m, const OracleOptions& options = {});

// Largest e(G) over regular n-vertex graphs with nu(G) <= m, trying degrees
// in decreasing order. Throws HypothesisError unless n >= 2m + 2, and
// std::invalid_argument above kOracleMaxOrder.
SearchOutcome oracle_rex(int n, int m, const OracleOptions& options = {});

// Structure of every optimal graph, from full labeled sweeps at the optimal
// degrees:
//   rsat: each minimizer is n - 2m disjoint cliques of one odd order >= 3 and
//         its factor-critical barrier is empty;
//   rex:  each maximizer has even degree.
// Each optimizer without a perfect matching also gets its factor-critical
// barrier built and verified.
struct StructureClaimsReport {
  int n = 0;
  int m = 0;
  std::optional<int> rsat_degree;
  std::uint64_t rsat_minimizers = 0;
  std::uint64_t clique_union_violations = 0;
  std::optional<Graph> first_clique_union_violation;
  std::optional<int> rex_degree;
  std::uint64_t rex_maximizers = 0;
  std::uint64_t odd_degree_violations = 0;
  std::uint64_t barriers_verified = 0;
  std::uint64_t barrier_failures = 0;
  bool exhaustive = true;

  bool holds() const {
    return exhaustive && clique_union_violations == 0 &&
           odd_degree_violations == 0 && barrier_failures == 0;
  }
};

StructureClaimsReport check_structure_claims(int n, int m, const OracleOptions& options = {});

// Disjoint union of `cliques` complete graphs of one odd order >= 3.
bool is_equal_odd_clique_union(const Graph& graph, int cliques);

}  // namespace regmatch

#endif  // REGMATCH_ORACLE_H_
