#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "treepart/decomposition.hpp"
#include "treepart/graph.hpp"
#include "treepart/pathwidth.hpp"
#include "treepart/tree_partition.hpp"

namespace treepart {

/// Fan: hub vertex 0 adjacent to every vertex of the path 1..n-1.
/// Ships a width-2 path-decomposition and a star-shaped tree-partition of
/// width at most 2*ceil(sqrt(n)): the centre bag holds the hub plus every
/// ceil(sqrt(n))-th path vertex, the leaf bags hold the segments between.
struct FanFamily {
  Graph graph;
  PathDecomposition pd;
  TreePartition partition;
};

inline FanFamily gen_fan(int n) {
  if (n < 2) throw std::invalid_argument("gen_fan: need n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  for (Vertex v = 1; v + 1 < n; ++v) edges.push_back({v, v + 1});
  FanFamily fan;
  fan.graph = Graph(n, std::move(edges));

  if (n == 2) {
    fan.pd.bags.push_back(VertexSet{0, 1});
  } else {
    for (Vertex v = 1; v + 1 < n; ++v)
      fan.pd.bags.push_back(VertexSet{0, v, v + 1});
  }

  const int block = static_cast<int>(std::ceil(std::sqrt(double(n))));
  VertexSet centre{0};
  for (Vertex v = block; v < n; v += block) centre.insert(v);
  std::vector<VertexSet> bags{centre};
  std::vector<Edge> tree_edges;
  std::vector<Vertex> run;
  auto close_run = [&] {
    if (run.empty()) return;
    tree_edges.push_back({0, static_cast<int>(bags.size())});
    bags.emplace_back(std::move(run));
    run.clear();
  };
  for (Vertex v = 1; v < n; ++v) {
    if (centre.contains(v))
      close_run();
    else
      run.push_back(v);
  }
  close_run();
  Graph star(static_cast<int>(bags.size()), std::move(tree_edges));
  PathDecomposition star_pd;
  if (star.vertex_count() == 1) {
    star_pd.bags.push_back(VertexSet{0});
  } else {
    for (int leaf = 1; leaf < star.vertex_count(); ++leaf)
      star_pd.bags.push_back(VertexSet{0, leaf});
  }
  fan.partition = TreePartition{std::move(star), std::move(bags),
                                std::move(star_pd)};
  return fan;
}

/// Comb S_n: spine path on vertices 0..n-1; tooth i is the path of n
/// vertices starting at n + i*n, whose first vertex hangs off spine vertex i.
/// The shipped decomposition is assembled along the spine and has width 2
/// for n >= 2.
struct CombFamily {
  Graph graph;
  PathDecomposition pd;
};

inline CombFamily gen_comb(int n) {
  if (n < 1) throw std::invalid_argument("gen_comb: need n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  for (int i = 0; i < n; ++i) {
    const Vertex base = n + i * n;
    edges.push_back({i, base});
    for (int j = 0; j + 1 < n; ++j)
      edges.push_back({base + j, base + j + 1});
  }
  CombFamily comb;
  comb.graph = Graph(n * (n + 1), std::move(edges));

  std::vector<Vertex> spine(n);
  std::iota(spine.begin(), spine.end(), 0);
  std::vector<PathDecomposition> teeth(n);
  for (int i = 0; i < n; ++i) {
    const Vertex base = n + i * n;
    if (n == 1)
      teeth[i].bags.push_back(VertexSet{base});
    else
      for (int j = 0; j + 1 < n; ++j)
        teeth[i].bags.push_back(VertexSet{base + j, base + j + 1});
  }
  comb.pd = assemble_tree_pd(comb.graph, spine, teeth);
  return comb;
}

/// Recursively nested caterpillar family: depth-1 is the n-vertex path
/// rooted at vertex 0; at depth i, a fresh copy of the depth-(i-1) tree
/// hangs off every vertex of a new n-vertex central path. Layout is
/// spine-first, then each spine vertex's subtree as one contiguous block
/// (depth-first), so the root is always vertex 0 and each copy's root is the
/// first id of its block. Maximum degree 3; the shipped decomposition,
/// assembled along the central path, has width at most `depth`.
struct LowerBoundTree {
  Graph graph;
  PathDecomposition pd;
  Vertex root = 0;
};

inline LowerBoundTree gen_lower_bound_tree(int depth, int n) {
  if (depth < 1 || n < 1)
    throw std::invalid_argument("gen_lower_bound_tree: need depth, n >= 1");

  // Each depth reuses one prototype of the previous depth, translated.
  std::vector<Edge> edges;
  PathDecomposition pd;
  long long size = n;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  if (n == 1)
    pd.bags.push_back(VertexSet{0});
  else
    for (Vertex v = 0; v + 1 < n; ++v)
      pd.bags.push_back(VertexSet{v, v + 1});

  for (int level = 2; level <= depth; ++level) {
    const std::vector<Edge> sub_edges = std::move(edges);
    const PathDecomposition sub_pd = std::move(pd);
    const long long sub_size = size;
    size = n + n * sub_size;
    if (size > (1LL << 30))
      throw std::invalid_argument("gen_lower_bound_tree: instance too large");

    edges.clear();
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    std::vector<PathDecomposition> subs(n);
    for (int v = 0; v < n; ++v) {
      const Vertex base = static_cast<Vertex>(n + v * sub_size);
      edges.push_back({v, base});
      for (const auto& [a, b] : sub_edges)
        edges.push_back({base + a, base + b});
      for (const auto& bag : sub_pd.bags) {
        std::vector<Vertex> shifted;
        for (Vertex u : bag) shifted.push_back(base + u);
        subs[v].bags.emplace_back(std::move(shifted));
      }
    }
    Graph whole(static_cast<int>(size), edges);
    std::vector<Vertex> spine(n);
    std::iota(spine.begin(), spine.end(), 0);
    pd = assemble_tree_pd(whole, spine, subs);
  }

  LowerBoundTree out;
  out.graph = Graph(static_cast<int>(size), std::move(edges));
  out.pd = std::move(pd);
  return out;
}

inline Graph gen_path(int n) {
  if (n < 0) throw std::invalid_argument("gen_path: need n >= 0");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

/// Random attachment tree: vertex v (v >= 1) attaches to a uniformly chosen
/// earlier vertex. The generator is its own deterministic PRNG walk, so the
/// same (n, seed) pair always yields the same edge set.
inline Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_tree: need n >= 1");
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
  if (state == 0) state = 1;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    edges.push_back(make_edge(static_cast<Vertex>(next() % v), v));
  return Graph(n, std::move(edges));
}

}  // namespace treepart
