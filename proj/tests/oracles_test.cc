#include "treepart/oracles.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "treepart/generators.hpp"
#include "treepart/pathwidth.hpp"
#include "treepart/tree_partition.hpp"

namespace treepart {
namespace {

TEST(BrutePathwidthTest, KnownValues) {
  EXPECT_EQ(brute_pathwidth(gen_path(5)), 1);
  Graph cycle5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_EQ(brute_pathwidth(cycle5), 2);
  EXPECT_EQ(brute_pathwidth(gen_fan(6).graph), 2);
  EXPECT_EQ(brute_pathwidth(Graph(1, {})), 0);
}

TEST(BrutePathwidthTest, SizeLimit) {
  EXPECT_THROW(brute_pathwidth(gen_path(10)), SizeLimitError);
  EXPECT_EQ(brute_pathwidth(gen_path(10), 10), 1);
}

// Exhaustive cross-check against the DP on every connected graph with up to
// 6 vertices; the full 7-vertex sweep lives in the acceptance suite.
TEST(BrutePathwidthTest, MatchesExactSearchExhaustivelyUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      if (!testutil::mask_connected(n, mask)) continue;
      const Graph g = testutil::graph_from_mask(n, mask);
      ASSERT_EQ(brute_pathwidth(g), exact_pathwidth(g).value)
          << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(BrutePathwidthTest, MatchesExactSearchOnRandom8And9) {
  testutil::Rng rng(61);
  for (int round = 0; round < 500; ++round) {
    const int n = 8 + (round % 2);
    const Graph g = testutil::random_graph(n, 15 + rng.below(50), rng);
    ASSERT_EQ(brute_pathwidth(g), exact_pathwidth(g).value);
  }
}

TEST(BrutePathPartitionWidthTest, KnownValues) {
  EXPECT_EQ(brute_path_partition_width(gen_path(7)), 1);
  EXPECT_EQ(brute_path_partition_width(Graph(1, {})), 1);
  // S_2 is itself a path on six vertices.
  EXPECT_EQ(brute_path_partition_width(gen_comb(2).graph), 1);
  // S_3 (12 vertices): the diameter argument gives width >= ceil(12/9) = 2.
  EXPECT_GE(brute_path_partition_width(gen_comb(3).graph), 2);
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(brute_path_partition_width(k4), 2);
}

TEST(BrutePathPartitionWidthTest, SizeLimit) {
  EXPECT_THROW(brute_path_partition_width(gen_path(17)), SizeLimitError);
  EXPECT_EQ(brute_path_partition_width(gen_path(17), 17), 1);
}

TEST(BrutePathPartitionWidthTest, RespectsDiameterInequality) {
  testutil::Rng rng(67);
  int connected_seen = 0;
  for (int round = 0; connected_seen < 60; ++round) {
    const Graph g = testutil::random_graph(1 + rng.below(10), 40, rng);
    if (connected_components(g).size() != 1) continue;
    ++connected_seen;
    const long long c = brute_path_partition_width(g);
    EXPECT_LE(g.vertex_count(), c * (diameter(g) + 1));
  }
}

TEST(BruteTreePartitionWidthTest, KnownValues) {
  EXPECT_EQ(brute_tree_partition_width(gen_comb(2).graph), 1);
  EXPECT_EQ(brute_tree_partition_width(gen_path(6)), 1);
  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(brute_tree_partition_width(triangle), 2);
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(brute_tree_partition_width(k4), 2);
  EXPECT_GE(brute_tree_partition_width(gen_fan(8).graph), 2);
}

TEST(BruteTreePartitionWidthTest, SizeLimit) {
  EXPECT_THROW(brute_tree_partition_width(gen_path(9)), SizeLimitError);
}

TEST(BruteTreePartitionWidthTest, TreesAreWidthOne) {
  testutil::Rng rng(71);
  for (int round = 0; round < 30; ++round)
    EXPECT_EQ(brute_tree_partition_width(testutil::random_tree(1 + rng.below(8), rng)),
              1);
}

// Structural couplings between the three widths: a path-partition is a
// tree-partition, and gluing consecutive path-partition bags pairwise gives
// a path-decomposition of width 2c-1.
TEST(OracleCouplingTest, WidthsRelateOnSmallConnectedGraphs) {
  testutil::Rng rng(107);
  int seen = 0;
  while (seen < 60) {
    const Graph g = testutil::random_graph(1 + rng.below(7), 45, rng);
    if (connected_components(g).size() != 1) continue;
    ++seen;
    const int pw = brute_pathwidth(g);
    const int ppw = brute_path_partition_width(g);
    const int tpw = brute_tree_partition_width(g);
    EXPECT_LE(tpw, ppw);
    EXPECT_LE(pw, 2 * ppw - 1);
    EXPECT_GE(ppw, 1);
  }
}

// The construction can never beat the optimum.
TEST(BruteTreePartitionWidthTest, LowerBoundsTheConstruction) {
  testutil::Rng rng(73);
  for (int round = 0; round < 60; ++round) {
    const Graph g = testutil::random_graph(1 + rng.below(7), 40, rng);
    const auto pd = exact_pathwidth(g).witness;
    const auto built =
        build_tree_partition(g, pd, {}, std::max(1, max_degree(g)));
    EXPECT_LE(brute_tree_partition_width(g), tp_width(built.partition));
  }
}

}  // namespace
}  // namespace treepart
