#include "treepart/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"
#include "treepart/generators.hpp"

namespace treepart {
namespace {

TEST(GraphTextTest, RoundTrip) {
  const auto comb = gen_comb(3);
  std::stringstream buffer;
  write_graph_text(comb.graph, buffer);
  const Graph back = read_graph_text(buffer);
  EXPECT_EQ(back, comb.graph);
}

TEST(GraphTextTest, ParsesCommentsAndOneBasedIds) {
  std::istringstream in("c a triangle\np 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  const Graph g = read_graph_text(in);
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(GraphTextTest, RejectsMalformedInput) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
  };
  EXPECT_THROW(parse("e 1 2\n"), ParseError);          // edge before header
  EXPECT_THROW(parse("p 2 1\ne 1 1\n"), ParseError);   // self-loop
  EXPECT_THROW(parse("p 2 2\ne 1 2\ne 2 1\n"), ParseError);  // duplicate
  EXPECT_THROW(parse("p 2 1\ne 1 3\n"), ParseError);   // out of range
  EXPECT_THROW(parse("p 2 2\ne 1 2\n"), ParseError);   // count mismatch
  EXPECT_THROW(parse("p 2 0\nq 1\n"), ParseError);     // unknown line
  EXPECT_THROW(parse(""), ParseError);                 // no header
}

TEST(GraphTextTest, FuzzedInputNeverCrashes) {
  treepart::testutil::Rng rng(103);
  const std::string alphabet = "pce 0123456789-\n\t";
  for (int round = 0; round < 2000; ++round) {
    std::string text;
    const int len = rng.below(120);
    for (int i = 0; i < len; ++i)
      text += alphabet[rng.below(static_cast<int>(alphabet.size()))];
    std::istringstream in(text);
    try {
      (void)read_graph_text(in);
    } catch (const ParseError&) {
      // rejected input is the expected outcome
    }
  }
}

TEST(JsonTest, PathDecompositionRoundTrip) {
  const auto fan = gen_fan(6);
  const auto j = to_json(fan.pd);
  EXPECT_EQ(j.at("kind"), "path-decomposition");
  EXPECT_EQ(path_decomposition_from_json(j), fan.pd);
}

TEST(JsonTest, TreeDecompositionRoundTrip) {
  Graph tree(2, {{0, 1}});
  TreeDecomposition td{tree, {VertexSet{0, 1}, VertexSet{1, 2}}};
  const auto j = to_json(td);
  const auto back = tree_decomposition_from_json(j);
  EXPECT_EQ(back.tree, td.tree);
  EXPECT_EQ(back.bags, td.bags);
}

TEST(JsonTest, TreePartitionRoundTripWithAndWithoutWitness) {
  const auto fan = gen_fan(9);
  const auto j = to_json(fan.partition);
  const auto back = tree_partition_from_json(j);
  EXPECT_EQ(back.tree, fan.partition.tree);
  EXPECT_EQ(back.bags, fan.partition.bags);
  ASSERT_TRUE(back.witness.has_value());
  EXPECT_EQ(*back.witness, *fan.partition.witness);

  TreePartition bare{Graph(1, {}), {VertexSet{0}}, std::nullopt};
  const auto j2 = to_json(bare);
  EXPECT_TRUE(j2.at("witness").is_null());
  EXPECT_FALSE(tree_partition_from_json(j2).witness.has_value());
}

TEST(JsonTest, KindDispatchAndErrors) {
  EXPECT_THROW(artifact_kind(nlohmann::json::array()), ParseError);
  EXPECT_THROW(path_decomposition_from_json({{"kind", "tree-partition"}}),
               ParseError);
  nlohmann::json missing_bag = {{"kind", "tree-partition"},
                                {"tree", {{"nodes", 2}, {"edges", {{0, 1}}}}},
                                {"bags", {{"0", {0}}}}};
  EXPECT_THROW(tree_partition_from_json(missing_bag), ParseError);
  nlohmann::json bad_key = {{"kind", "tree-partition"},
                            {"tree", {{"nodes", 1}, {"edges", nlohmann::json::array()}}},
                            {"bags", {{"zero", {0}}}}};
  EXPECT_THROW(tree_partition_from_json(bad_key), ParseError);
}

TEST(TraceJsonTest, ExportsLevels) {
  const auto comb = gen_comb(3);
  const auto built = build_tree_partition(comb.graph, comb.pd, {}, 3);
  const auto j = trace_to_json(built.trace);
  EXPECT_EQ(j.at("kind"), "construction-trace");
  ASSERT_FALSE(j.at("levels").empty());
  const auto& root = j.at("levels")[0];
  EXPECT_EQ(root.at("k"), 2);
  EXPECT_EQ(root.at("depth"), 0);
  EXPECT_TRUE(root.contains("subpaths"));
}

TEST(DotTest, GraphAndClusters) {
  const auto fan = gen_fan(5);
  std::ostringstream plain;
  write_dot_graph(fan.graph, plain);
  EXPECT_NE(plain.str().find("graph G {"), std::string::npos);
  EXPECT_NE(plain.str().find(" -- "), std::string::npos);

  std::ostringstream clustered;
  write_dot_tree_partition(fan.graph, fan.partition, clustered);
  EXPECT_NE(clustered.str().find("subgraph cluster_0"), std::string::npos);
  EXPECT_NE(clustered.str().find("style=dashed"), std::string::npos);
}

}  // namespace
}  // namespace treepart
