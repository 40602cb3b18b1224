#include "regmatch/matching.h"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "regmatch/gallai_edmonds.h"
#include "test_util.h"

namespace regmatch {
namespace {

using testing::brute_force_matching_number;
using testing::graph_of;
using testing::petersen_graph;
using testing::random_graph;
using testing::star_graph;

Graph union_of(std::vector<Graph> parts) { return disjoint_union(parts); }

TEST(MatchingTest, RejectsOverlappingEdges) {
  EXPECT_THROW(Matching(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(Matching(2, {{0, 2}}), std::invalid_argument);
  const Vertex not_involution[] = {1, 2, 0};
  EXPECT_THROW(Matching::from_mates(not_involution), std::invalid_argument);
}

TEST(MatchingTest, EdgesAreCanonicallySorted) {
  const Matching m(6, {{4, 5}, {0, 3}});
  EXPECT_EQ(std::vector<Edge>(m.edges().begin(), m.edges().end()), (std::vector<Edge>{{0, 3}, {4, 5}}));
  EXPECT_EQ(m.mate(3), 0);
  EXPECT_FALSE(m.covers(1));
}

TEST(MaximumMatchingTest, Examples) {
  EXPECT_EQ(maximum_matching(cycle_graph(5)).size(), 2);
  const Graph two_k5 = union_of({complete_graph(5), complete_graph(5)});
  EXPECT_EQ(maximum_matching(two_k5).size(), 4);
}

TEST(MaximumMatchingTest, PetersenAgainstSubsetSweep) {
  const Graph petersen = petersen_graph();
  ASSERT_EQ(regular_degree(petersen), 3);
  const TutteBergeResult tb = tutte_berge_deficiency(petersen);
  EXPECT_EQ(tb.deficiency, 0);
  EXPECT_EQ(tb.matching_number(), 5);
  EXPECT_EQ(brute_force_matching_number(petersen), 5);
  const Matching m = maximum_matching(petersen);
  EXPECT_EQ(m.size(), 5);
  EXPECT_TRUE(m.is_matching_of(petersen));
}

TEST(MaximumMatchingTest, IsReproducible) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 12, 0.3);
    EXPECT_EQ(maximum_matching(g), maximum_matching(g));
  }
}

TEST(MaximumMatchingTest, SeededSearchReachesTheSameSize) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 14, 0.25);
    const auto edges = g.edges();
    std::vector<Edge> greedy;
    std::vector<char> used(g.order(), 0);
    for (const Edge& e : edges) {
      if (!used[e.u] && !used[e.v]) {
        used[e.u] = used[e.v] = 1;
        greedy.push_back(e);
      }
    }
    const Matching seeded = maximum_matching(g, Matching(g.order(), greedy));
    EXPECT_TRUE(seeded.is_matching_of(g));
    EXPECT_EQ(seeded.size(), matching_number(g));
  }
  EXPECT_THROW(maximum_matching(cycle_graph(4), Matching(4, {{0, 2}})), std::invalid_argument);
}

TEST(MatchingNumberTest, Examples) {
  EXPECT_EQ(matching_number(Graph(0)), 0);
  EXPECT_EQ(matching_number(Graph(7)), 0);
  const Graph three_k3 = union_of({complete_graph(3), complete_graph(3), complete_graph(3)});
  EXPECT_EQ(matching_number(three_k3), 3);
  EXPECT_EQ(matching_number(union_of({cycle_graph(3), cycle_graph(5)})), 3);
}

TEST(MatchingNumberTest, AgreesWithExhaustiveSearchOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 12;
    const double density = 0.1 + 0.8 * (trial % 9) / 8.0;
    const Graph g = random_graph(rng, n, density);
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(m.is_matching_of(g));
    ASSERT_EQ(m.size(), brute_force_matching_number(g));
    ASSERT_EQ(m.size(), tutte_berge_deficiency(g).matching_number());
  }
}

TEST(MatchingNumberTest, AddingAnEdgeRaisesByAtMostOne) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 3 + trial % 8, 0.35);
    const int nu = matching_number(g);
    for (const Edge& e : non_edges(g)) {
      const int delta = matching_number(with_edge(g, e)) - nu;
      ASSERT_TRUE(delta == 0 || delta == 1);
    }
  }
}

TEST(HasPerfectMatchingTest, Examples) {
  EXPECT_TRUE(has_perfect_matching(complete_graph(4)));
  EXPECT_TRUE(has_perfect_matching(cycle_graph(6)));
  EXPECT_FALSE(has_perfect_matching(complete_graph(5)));
  EXPECT_FALSE(has_perfect_matching(cycle_graph(7)));
  EXPECT_FALSE(has_perfect_matching(star_graph(3)));
  EXPECT_TRUE(has_perfect_matching(Graph(0)));
}

TEST(IsFactorCriticalTest, Examples) {
  EXPECT_TRUE(is_factor_critical(cycle_graph(5)));
  EXPECT_FALSE(is_factor_critical(complete_graph(4)));
  EXPECT_FALSE(is_factor_critical(star_graph(2)));  // path P3
  EXPECT_TRUE(is_factor_critical(Graph(1)));
  EXPECT_TRUE(is_factor_critical(complete_graph(7)));
  EXPECT_FALSE(is_factor_critical(union_of({cycle_graph(3), cycle_graph(3), Graph(1)})));
  EXPECT_FALSE(is_factor_critical(Graph(0)));
}

TEST(IsFactorCriticalTest, ImpliesOddConnectedAndFullyMissable) {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_graph(rng, 1 + 2 * (trial % 5), 0.6);
    if (!is_factor_critical(g)) continue;
    ++seen;
    EXPECT_EQ(g.order() % 2, 1);
    EXPECT_TRUE(is_connected(g));
    const auto ge = gallai_edmonds(g);
    EXPECT_EQ(static_cast<int>(ge.missable.size()), g.order());
    EXPECT_TRUE(ge.barrier.empty());
  }
  EXPECT_GT(seen, 20);
}

}  // namespace
}  // namespace regmatch
