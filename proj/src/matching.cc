#include "regmatch/matching.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace regmatch {

Matching::Matching(int order, std::vector<Edge> edges)
    : edges_(std::move(edges)), mates_(order, kUnmatched) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= e.v || e.v >= order) {
      throw std::invalid_argument("matching edge out of range");
    }
    if (mates_[e.u] != kUnmatched || mates_[e.v] != kUnmatched) {
      throw std::invalid_argument("matching edges share a vertex");
    }
    mates_[e.u] = e.v;
    mates_[e.v] = e.u;
  }
}

Matching Matching::from_mates(std::span<const Vertex> mates) {
  const int n = static_cast<int>(mates.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex u = mates[v];
    if (u == kUnmatched) continue;
    if (u < 0 || u >= n || u == v || mates[u] != v) {
      throw std::invalid_argument("mate array is not an involution");
    }
    if (v < u) edges.push_back({v, u});
  }
  return Matching(n, std::move(edges));
}

bool Matching::is_matching_of(const Graph& graph) const {
  if (graph.order() != order()) return false;
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return graph.has_edge(e.u, e.v); });
}

namespace {

// Augmenting-path search with blossom shrinking. Blossoms are tracked by a
// base[] relabelling inside a single BFS tree rooted at an exposed vertex.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& graph, std::vector<Vertex> mates)
      : graph_(graph),
        n_(graph.order()),
        mate_(std::move(mates)),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_),
        on_path_(n_) {
    queue_.reserve(n_);
  }

  std::vector<Vertex> run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kUnmatched) continue;
      const Vertex end = find_augmenting_path(root);
      if (end != kUnmatched) augment(end);
    }
    return std::move(mate_);
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    while (true) {
      a = base_[a];
      on_path_[a] = 1;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    in_tree_[root] = 1;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex to : graph_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root ||
            (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          // Odd cycle: shrink it into the base it shares with the tree.
          const Vertex blossom_base = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, blossom_base, to);
          mark_path(to, blossom_base, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = blossom_base;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          in_tree_[mate_[to]] = 1;
          queue_.push_back(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  void augment(Vertex v) {
    while (v != kUnmatched) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& graph_;
  const int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
  std::vector<Vertex> queue_;
};

}  // namespace

Matching maximum_matching(const Graph& graph) {
  return maximum_matching(graph, Matching(graph.order(), {}));
}

Matching maximum_matching(const Graph& graph, const Matching& seed) {
  if (!seed.is_matching_of(graph)) {
    throw std::invalid_argument("seed is not a matching of the graph");
  }
  std::vector<Vertex> mates(seed.mates().begin(), seed.mates().end());
  BlossomSearch search(graph, std::move(mates));
  return Matching::from_mates(search.run());
}

int matching_number(const Graph& graph) {
  return maximum_matching(graph).size();
}

bool has_perfect_matching(const Graph& graph) {
  return graph.order() % 2 == 0 && 2 * matching_number(graph) == graph.order();
}

bool is_factor_critical(const Graph& graph) {
  const int n = graph.order();
  if (n % 2 == 0) return false;
  if (!is_connected(graph)) return false;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex removed[] = {v};
    if (!has_perfect_matching(graph.without_vertices(removed))) return false;
  }
  return true;
}

}  // namespace regmatch
