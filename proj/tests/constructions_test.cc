#include "regmatch/constructions.h"

#include <functional>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "regmatch/certification.h"
#include "regmatch/matching.h"

namespace regmatch {
namespace {

using ::testing::ElementsAre;

Graph union_of(std::vector<Graph> parts) { return disjoint_union(parts); }

void expect_valid_decomposition(int k) {
  const HamiltonDecomposition hd = walecki_hamilton_decomposition(k);
  const int n = 2 * k + 1;
  ASSERT_EQ(hd.order, n);
  ASSERT_EQ(static_cast<int>(hd.cycles.size()), k);
  std::set<Edge> covered;
  for (const auto& cycle : hd.cycles) {
    ASSERT_EQ(static_cast<int>(cycle.size()), n);
    EXPECT_EQ(std::set<Vertex>(cycle.begin(), cycle.end()).size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Edge e = make_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
      EXPECT_TRUE(covered.insert(e).second) << "edge reused in k=" << k;
    }
  }
  EXPECT_EQ(static_cast<int>(covered.size()), k * n);
}

TEST(WaleckiTest, SmallCases) {
  const HamiltonDecomposition k1 = walecki_hamilton_decomposition(1);
  ASSERT_EQ(k1.cycles.size(), 1u);
  EXPECT_EQ(cycles_union(3, k1.cycles), complete_graph(3));

  const HamiltonDecomposition k2 = walecki_hamilton_decomposition(2);
  EXPECT_EQ(cycles_union(5, k2.cycles), complete_graph(5));
  expect_valid_decomposition(2);
  expect_valid_decomposition(3);
  EXPECT_THROW(walecki_hamilton_decomposition(0), std::invalid_argument);
}

TEST(WaleckiTest, EachCycleIsTwoRegularAndSpanning) {
  for (int k = 1; k <= 20; ++k) {
    expect_valid_decomposition(k);
    const HamiltonDecomposition hd = walecki_hamilton_decomposition(k);
    for (const auto& cycle : hd.cycles) {
      const Graph single = cycles_union(hd.order, {cycle});
      EXPECT_EQ(regular_degree(single), 2);
      EXPECT_TRUE(is_connected(single));
    }
    EXPECT_EQ(cycles_union(hd.order, hd.cycles), complete_graph(hd.order));
  }
}

TEST(RsatExtremalTest, Examples) {
  EXPECT_EQ(rsat_extremal(6, 2), union_of({complete_graph(3), complete_graph(3)}));
  const Graph two_k5 = rsat_extremal(10, 4);
  EXPECT_EQ(two_k5, union_of({complete_graph(5), complete_graph(5)}));
  EXPECT_EQ(two_k5.edge_count(), 20);
  const Graph four_k3 = rsat_extremal(12, 4);
  EXPECT_EQ(four_k3.edge_count(), 12);
  EXPECT_EQ(regular_degree(four_k3), 2);
  EXPECT_EQ(connected_components(four_k3).size(), 4u);
}

TEST(RsatExtremalTest, NonexistentPairs) {
  try {
    rsat_extremal(8, 3);
    FAIL() << "expected NonexistentError";
  } catch (const NonexistentError& e) {
    EXPECT_EQ(e.reason(), NonexistenceReason::kDivisibilityFails);
  }
  EXPECT_THROW(rsat_extremal(7, 2), NonexistentError);
}

TEST(OddPartitionTest, Examples) {
  EXPECT_THAT(odd_partition(12, 5), ElementsAre(5, 7));
  EXPECT_THAT(odd_partition(11, 4), ElementsAre(3, 3, 5));
  EXPECT_THAT(odd_partition(10, 4), ElementsAre(5, 5));
  EXPECT_THAT(odd_partition(8, 2), ElementsAre(1, 1, 1, 5));  // r = 0
  EXPECT_THROW(odd_partition(9, 4), HypothesisError);
}

TEST(OddPartitionTest, DefaultIsValidAcrossTheRange) {
  for (int m = 1; m <= 40; ++m) {
    for (int n = 2 * m + 2; n <= 100; ++n) {
      EXPECT_NO_THROW(validate_partition(n, m, odd_partition(n, m))) << n << " " << m;
    }
  }
}

TEST(ValidatePartitionTest, RejectsEachViolation) {
  EXPECT_THROW(validate_partition(12, 5, {12}), std::invalid_argument);     // count
  EXPECT_THROW(validate_partition(12, 5, {6, 6}), std::invalid_argument);   // even
  EXPECT_THROW(validate_partition(12, 5, {3, 9}), std::invalid_argument);   // < r + 1
  EXPECT_THROW(validate_partition(12, 5, {5, 5}), std::invalid_argument);   // sum
  EXPECT_NO_THROW(validate_partition(12, 5, {7, 5}));
}

TEST(RexExtremalCyclesTest, Examples) {
  const Graph g = rex_extremal_cycles(12, 5, std::vector<int>{5, 7});
  EXPECT_EQ(g.edge_count(), 24);
  EXPECT_EQ(regular_degree(g), 4);
  EXPECT_EQ(matching_number(g), 5);
  const Vertex first_block[] = {0, 1, 2, 3, 4};
  EXPECT_EQ(g.induced_subgraph(first_block), complete_graph(5));

  const Graph h = rex_extremal_cycles(11, 4, std::vector<int>{3, 3, 5});
  EXPECT_EQ(h, union_of({cycle_graph(3), cycle_graph(3),
                         cycles_union(5, {walecki_hamilton_decomposition(2).cycles[0]})}));
  EXPECT_EQ(h.edge_count(), 11);
  EXPECT_EQ(regular_degree(h), 2);
  EXPECT_EQ(matching_number(h), 4);

  EXPECT_EQ(rex_extremal_cycles(4, 1), Graph(4));
  EXPECT_THROW(rex_extremal_cycles(12, 5, std::vector<int>{3, 9}), std::invalid_argument);
}

// Every multiset of n - 2m odd parts >= r + 1 summing to n, nonincreasing.
void for_each_partition(int remaining, int parts, int max_part, int min_part,
                        std::vector<int>& current, const std::function<void()>& visit) {
  if (parts == 0) {
    if (remaining == 0) visit();
    return;
  }
  for (int p = std::min(max_part, remaining); p >= min_part; --p) {
    if (p % 2 == 0) continue;
    current.push_back(p);
    for_each_partition(remaining - p, parts - 1, p, min_part, current, visit);
    current.pop_back();
  }
}

TEST(RexExtremalCyclesTest, EveryValidPartitionUpToSixteen) {
  int checked = 0;
  for (int m = 1; 2 * m + 2 <= 16; ++m) {
    for (int n = 2 * m + 2; n <= 16; ++n) {
      const int r = static_cast<int>(rex_degree(n, m));
      std::vector<int> current;
      for_each_partition(n, n - 2 * m, n, r + 1, current, [&] {
        const Graph g = rex_extremal_cycles(n, m, current);
        ++checked;
        EXPECT_EQ(g.order(), n);
        EXPECT_EQ(regular_degree(g), r);
        EXPECT_EQ(2 * g.edge_count(), static_cast<std::int64_t>(n) * r);
        // Edgeless when r = 0; otherwise each part 2r_i + 1 contributes r_i.
        EXPECT_EQ(matching_number(g), r == 0 ? 0 : m);
      });
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(RexExtremalCliqueFormTest, Examples) {
  EXPECT_EQ(rex_extremal_clique_form(11, 4),
            union_of({cycle_graph(5), complete_graph(3), complete_graph(3)}));
  const int jumps[] = {1, 2};
  const Graph g = rex_extremal_clique_form(12, 5);
  EXPECT_EQ(g, union_of({circulant_graph(7, jumps), complete_graph(5)}));
  EXPECT_EQ(g.edge_count(), 24);
  EXPECT_EQ(rex_extremal_clique_form(10, 4), union_of({complete_graph(5), complete_graph(5)}));
  EXPECT_EQ(rex_extremal_clique_form(7, 2), Graph(7));
}

TEST(RexConstructionsTest, AgreeOnOrderDegreeAndSize) {
  for (int m = 1; m <= 12; ++m) {
    for (int n = 2 * m + 2; n <= 30; ++n) {
      const Graph a = rex_extremal_cycles(n, m);
      const Graph b = rex_extremal_clique_form(n, m);
      EXPECT_EQ(a.order(), b.order());
      EXPECT_EQ(regular_degree(a), regular_degree(b));
      EXPECT_EQ(a.edge_count(), b.edge_count());
      EXPECT_EQ(a.edge_count(), rex_matching(n, m).edges());
    }
  }
}

TEST(FactorCriticalRegularTest, Examples) {
  EXPECT_EQ(factor_critical_regular(5, 2), cycle_graph(5));
  const Graph g = factor_critical_regular(7, 4);
  EXPECT_EQ(regular_degree(g), 4);
  EXPECT_TRUE(is_factor_critical(g));
  EXPECT_EQ(factor_critical_regular(9, 2), cycle_graph(9));
  EXPECT_EQ(factor_critical_regular(5, 4), complete_graph(5));
}

TEST(FactorCriticalRegularTest, RejectsParityAndRange) {
  EXPECT_THROW(factor_critical_regular(6, 2), std::invalid_argument);
  EXPECT_THROW(factor_critical_regular(7, 3), std::invalid_argument);
  EXPECT_THROW(factor_critical_regular(7, 0), std::invalid_argument);
  EXPECT_THROW(factor_critical_regular(5, 6), std::invalid_argument);
}

TEST(ConstructionsTest, CertifiedForModerateOrders) {
  for (int m = 1; m <= 14; ++m) {
    for (int n = 2 * m + 2; n <= 30; ++n) {
      if (rsat_matching(n, m).exists()) {
        EXPECT_TRUE(certify_rsat_extremal(rsat_extremal(n, m), n, m).passed()) << n << " " << m;
      }
      EXPECT_TRUE(certify_rex_extremal(rex_extremal_cycles(n, m), n, m).passed());
      EXPECT_TRUE(certify_rex_extremal(rex_extremal_clique_form(n, m), n, m).passed());
    }
  }
}

}  // namespace
}  // namespace regmatch
