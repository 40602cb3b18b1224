#include "regmatch/oracle.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "regmatch/certification.h"
#include "regmatch/extremal.h"
#include "regmatch/gallai_edmonds.h"
#include "regmatch/matching.h"

namespace regmatch {
namespace {

using Clock = std::chrono::steady_clock;

struct EnumState {
  std::array<std::uint64_t, kOracleMaxOrder> adj{};
  std::array<int, kOracleMaxOrder> need{};
};

// Backtracking over vertices in index order. descend(state, v) completes the
// neighborhoods of vertices v, v+1, ... and hands each finished state to the
// sink; reaching `stop` also counts as finished, which is how the stream is
// cut into independent prefixes.
class RegularEnumerator {
 public:
  using Sink = std::function<bool(const EnumState&)>;

  RegularEnumerator(int n, int r, const EnumerationOptions& options, int stop, Sink sink)
      : n_(n), r_(r), options_(options), stop_(std::min(stop, n)), sink_(std::move(sink)) {}

  EnumState root() const {
    EnumState s;
    for (int v = 0; v < n_; ++v) s.need[v] = r_;
    return s;
  }

  // Returns false when the sink asked to stop.
  bool descend(EnumState& s, int v) {
    while (v < stop_ && s.need[v] == 0) ++v;
    if (v >= stop_) return sink_(s);
    std::uint64_t candidates = 0;
    for (int u = v + 1; u < n_; ++u) {
      if (s.need[u] > 0) candidates |= std::uint64_t{1} << u;
    }
    if (std::popcount(candidates) < s.need[v]) return true;
    if (v == 0 && options_.fix_first_neighborhood) {
      const std::uint64_t prefix = ((std::uint64_t{1} << r_) - 1) << 1;
      return pick(s, v, prefix, s.need[v]);
    }
    return pick(s, v, candidates, s.need[v]);
  }

 private:
  bool pick(EnumState& s, int v, std::uint64_t candidates, int k) {
    if (k == 0) {
      if (!feasible(s, v)) return true;
      return descend(s, v + 1);
    }
    if (std::popcount(candidates) < k) return true;
    const int u = std::countr_zero(candidates);
    const std::uint64_t rest = candidates & (candidates - 1);

    s.adj[v] |= std::uint64_t{1} << u;
    s.adj[u] |= std::uint64_t{1} << v;
    --s.need[u];
    --s.need[v];
    const bool keep_going = pick(s, v, rest, k - 1);
    ++s.need[v];
    ++s.need[u];
    s.adj[u] &= ~(std::uint64_t{1} << v);
    s.adj[v] &= ~(std::uint64_t{1} << u);
    if (!keep_going) return false;

    return pick(s, v, rest, k);
  }

  // Each later vertex must still find enough partners among later vertices.
  bool feasible(const EnumState& s, int v) const {
    int open = 0;
    for (int u = v + 1; u < n_; ++u) open += s.need[u] > 0;
    for (int u = v + 1; u < n_; ++u) {
      if (s.need[u] > open - 1 && s.need[u] > 0) return false;
    }
    return true;
  }

  const int n_;
  const int r_;
  const EnumerationOptions options_;
  const int stop_;
  Sink sink_;
};

void check_enumeration_args(int n, int r) {
  if (n < 1 || n > kOracleMaxOrder) {
    throw std::invalid_argument("enumeration order must be in 1.." +
                                std::to_string(kOracleMaxOrder));
  }
  if (r < 0 || r >= n) {
    throw std::invalid_argument("degree " + std::to_string(r) + " outside 0.." +
                                std::to_string(n - 1));
  }
}

int greedy_matching_size(AdjacencyMasks masks) {
  std::uint64_t used = 0;
  int size = 0;
  for (std::size_t v = 0; v < masks.size(); ++v) {
    if ((used >> v) & 1) continue;
    const std::uint64_t open = masks[v] & ~used;
    if (open == 0) continue;
    used |= (std::uint64_t{1} << v) | (open & (~open + 1));
    ++size;
  }
  return size;
}

bool accepts_free(AdjacencyMasks masks, int m) {
  if (greedy_matching_size(masks) > m) return false;
  return matching_number(Graph::from_adjacency_masks(masks)) <= m;
}

bool accepts_saturated(AdjacencyMasks masks, int m) {
  if (greedy_matching_size(masks) > m) return false;
  return is_saturated_matching(Graph::from_adjacency_masks(masks), m).saturated;
}

struct TaskResult {
  std::uint64_t examined = 0;
  bool finished = false;  // ran to the end or to its accepted graph
  std::vector<std::vector<std::uint64_t>> hits;
};

}  // namespace

std::uint64_t enumerate_regular(int n, int r, const EnumerationOptions& options,
                                const std::function<bool(AdjacencyMasks)>& visit) {
  check_enumeration_args(n, r);
  if ((n * r) % 2 != 0) return 0;
  std::uint64_t count = 0;
  RegularEnumerator enumerator(n, r, options, n, [&](const EnumState& s) {
    ++count;
    return visit(AdjacencyMasks(s.adj.data(), n));
  });
  EnumState root = enumerator.root();
  enumerator.descend(root, 0);
  return count;
}

std::vector<Graph> regular_graphs(int n, int r, const EnumerationOptions& options) {
  std::vector<Graph> out;
  enumerate_regular(n, r, options, [&](AdjacencyMasks masks) {
    out.push_back(Graph::from_adjacency_masks(masks));
    return true;
  });
  return out;
}

SweepResult sweep_regular(int n, int r, const SweepOptions& options,
                          const std::function<bool(AdjacencyMasks)>& accept) {
  check_enumeration_args(n, r);
  SweepResult out;
  if ((n * r) % 2 != 0) return out;

  // Prefixes end once the first vertex with a free choice is done.
  const int split = options.enumeration.fix_first_neighborhood ? 2 : 1;
  std::vector<std::pair<EnumState, int>> tasks;
  {
    RegularEnumerator prefixes(n, r, options.enumeration, split, [&](const EnumState& s) {
      tasks.emplace_back(s, split);
      return true;
    });
    EnumState root = prefixes.root();
    prefixes.descend(root, 0);
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> winner{kNone};
  std::atomic<bool> timed_out{false};

  auto run_task = [&](std::size_t index) {
    TaskResult& result = results[index];
    bool cut = false;
    RegularEnumerator enumerator(n, r, options.enumeration, n, [&](const EnumState& s) {
      ++result.examined;
      if ((result.examined & 1023) == 0) {
        if (options.deadline && Clock::now() > *options.deadline) {
          timed_out = true;
          cut = true;
          return false;
        }
        if (options.stop_at_first && winner.load() < index) {
          cut = true;
          return false;
        }
      }
      const AdjacencyMasks masks(s.adj.data(), n);
      if (!accept(masks)) return true;
      result.hits.emplace_back(masks.begin(), masks.end());
      if (!options.stop_at_first) return true;
      std::size_t current = winner.load();
      while (index < current && !winner.compare_exchange_weak(current, index)) {
      }
      return false;
    });
    EnumState state = tasks[index].first;
    enumerator.descend(state, tasks[index].second);
    result.finished = !cut;
  };

  auto worker = [&] {
    while (!timed_out) {
      const std::size_t index = next_task++;
      if (index >= tasks.size()) return;
      if (options.stop_at_first && winner.load() < index) continue;
      run_task(index);
    }
  };

  const int threads = std::clamp<int>(options.threads, 1, std::max<int>(1, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (options.stop_at_first && i > winner.load()) break;
    out.examined += results[i].examined;
    if (!results[i].finished) out.complete = false;
    for (auto& hit : results[i].hits) out.hits.push_back(std::move(hit));
  }
  return out;
}

std::string_view to_string(SearchTarget target) {
  return target == SearchTarget::kRsat ? "rsat" : "rex";
}

namespace {

void check_oracle_order(int n) {
  if (n < 2 || n > kOracleMaxOrder) {
    throw std::invalid_argument("oracle order must be in 2.." +
                                std::to_string(kOracleMaxOrder) + " (got " +
                                std::to_string(n) + ")");
  }
}

SweepOptions existence_sweep(const OracleOptions& options,
                             std::optional<Clock::time_point> deadline) {
  SweepOptions sweep;
  sweep.enumeration.fix_first_neighborhood = options.fix_first_neighborhood;
  sweep.threads = options.threads;
  sweep.deadline = deadline;
  sweep.stop_at_first = true;
  return sweep;
}

std::optional<Clock::time_point> deadline_for(const OracleOptions& options,
                                              Clock::time_point start) {
  if (!options.budget) return std::nullopt;
  return start + std::chrono::duration_cast<Clock::duration>(*options.budget);
}

// Runs the degree sweep in the given order, stopping at the first degree that
// has an accepted graph.
SearchOutcome degree_search(SearchTarget target, int n, int m, const std::vector<int>& degrees,
                            const OracleOptions& options,
                            const std::function<bool(AdjacencyMasks)>& accept) {
  const auto start = Clock::now();
  const auto deadline = deadline_for(options, start);
  SearchOutcome out;
  out.target = target;
  out.n = n;
  out.m = m;
  for (int r : degrees) {
    if (deadline && Clock::now() > *deadline) {
      out.exhaustive = false;
      out.per_degree.push_back({r, 0, false, false});
      break;
    }
    const SweepResult sweep = sweep_regular(n, r, existence_sweep(options, deadline), accept);
    out.examined += sweep.examined;
    out.per_degree.push_back({r, sweep.examined, sweep.complete, !sweep.hits.empty()});
    if (!sweep.hits.empty()) {
      out.degree = r;
      out.edges = static_cast<std::int64_t>(n) * r / 2;
      out.witness = Graph::from_adjacency_masks(sweep.hits.front());
      break;
    }
    if (!sweep.complete) {
      out.exhaustive = false;
      break;
    }
  }
  out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!out.found() && !out.exhaustive) out.note = "not found within budget";
  return out;
}

}  // namespace

SearchOutcome oracle_rsat(int n, int m, const OracleOptions& options) {
  check_oracle_order(n);
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (n < 2 * m + 2) {
    SearchOutcome out;
    out.target = SearchTarget::kRsat;
    out.n = n;
    out.m = m;
    out.note = "no matching of size m+1 fits on n <= 2m+1 vertices";
    return out;
  }
  std::vector<int> degrees;
  for (int r = 0; r < n; ++r) {
    if ((n * r) % 2 == 0) degrees.push_back(r);
  }
  SearchOutcome out = degree_search(SearchTarget::kRsat, n, m, degrees, options,
                                    [m](AdjacencyMasks masks) { return accepts_saturated(masks, m); });
  if (out.witness) {
    const Certificate cert = certify_saturated(*out.witness, m);
    if (!cert.passed() || regular_degree(*out.witness) != out.degree) {
      throw std::logic_error("rsat oracle witness failed certification");
    }
  }
  return out;
}

SearchOutcome oracle_rex(int n, int m, const OracleOptions& options) {
  check_rex_hypothesis(n, m);
  check_oracle_order(n);
  std::vector<int> degrees;
  for (int r = n - 1; r >= 0; --r) {
    if ((n * r) % 2 == 0) degrees.push_back(r);
  }
  SearchOutcome out = degree_search(SearchTarget::kRex, n, m, degrees, options,
                                    [m](AdjacencyMasks masks) { return accepts_free(masks, m); });
  if (out.witness) {
    if (!is_matching_free(*out.witness, m) || regular_degree(*out.witness) != out.degree) {
      throw std::logic_error("rex oracle witness failed certification");
    }
  }
  return out;
}

bool is_equal_odd_clique_union(const Graph& graph, int cliques) {
  const auto components = connected_components(graph);
  if (static_cast<int>(components.size()) != cliques || components.empty()) return false;
  const std::size_t d = components.front().size();
  if (d < 3 || d % 2 == 0) return false;
  for (const auto& component : components) {
    if (component.size() != d) return false;
    for (Vertex v : component) {
      if (static_cast<std::size_t>(graph.degree(v)) != d - 1) return false;
    }
  }
  return true;
}

StructureClaimsReport check_structure_claims(int n, int m, const OracleOptions& options) {
  check_rex_hypothesis(n, m);
  StructureClaimsReport report;
  report.n = n;
  report.m = m;

  OracleOptions existence = options;
  SweepOptions full;
  full.enumeration.fix_first_neighborhood = false;
  full.threads = options.threads;
  full.stop_at_first = false;
  if (options.budget) {
    full.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*options.budget);
  }

  auto verify_barrier_of = [&](const Graph& g) {
    if (has_perfect_matching(g)) return;
    ++report.barriers_verified;
    try {
      const VertexSet s = factor_critical_barrier(g);
      if (!verify_barrier(g, s).passed()) ++report.barrier_failures;
    } catch (const std::logic_error&) {
      ++report.barrier_failures;
    }
  };

  const SearchOutcome rsat = oracle_rsat(n, m, existence);
  report.exhaustive = report.exhaustive && rsat.exhaustive;
  if (rsat.found()) {
    report.rsat_degree = rsat.degree;
    const SweepResult sweep = sweep_regular(
        n, *rsat.degree, full, [m](AdjacencyMasks masks) { return accepts_saturated(masks, m); });
    report.exhaustive = report.exhaustive && sweep.complete;
    for (const auto& masks : sweep.hits) {
      const Graph g = Graph::from_adjacency_masks(masks);
      ++report.rsat_minimizers;
      verify_barrier_of(g);
      bool ok = is_equal_odd_clique_union(g, n - 2 * m);
      if (ok) {
        try {
          ok = factor_critical_barrier(g).empty();
        } catch (const std::exception&) {
          ok = false;
        }
      }
      if (!ok) {
        ++report.clique_union_violations;
        if (!report.first_clique_union_violation) report.first_clique_union_violation = g;
      }
    }
  }

  const SearchOutcome rex = oracle_rex(n, m, existence);
  report.exhaustive = report.exhaustive && rex.exhaustive;
  if (rex.found()) {
    report.rex_degree = rex.degree;
    const SweepResult sweep = sweep_regular(
        n, *rex.degree, full, [m](AdjacencyMasks masks) { return accepts_free(masks, m); });
    report.exhaustive = report.exhaustive && sweep.complete;
    for (const auto& masks : sweep.hits) {
      const Graph g = Graph::from_adjacency_masks(masks);
      ++report.rex_maximizers;
      verify_barrier_of(g);
      const auto d = regular_degree(g);
      if (!d || *d % 2 != 0) ++report.odd_degree_violations;
    }
  }
  return report;
}

}  // namespace regmatch
