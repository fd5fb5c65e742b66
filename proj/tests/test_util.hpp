#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "treepart/decomposition.hpp"
#include "treepart/graph.hpp"

namespace treepart::testutil {

// Deterministic xorshift; tests never depend on library RNG internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x2545f4914f6cdd1dULL) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  // In [0, bound)
  int below(int bound) { return static_cast<int>(next() % bound); }
  bool chance(int percent) { return below(100) < percent; }

 private:
  std::uint64_t state_;
};

inline Graph random_graph(int n, int edge_percent, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(edge_percent)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    edges.push_back(make_edge(rng.below(v), v));
  return Graph(n, std::move(edges));
}

// Builds a valid (graph, path-decomposition) pair from random per-vertex
// intervals: each vertex occupies a contiguous run of bags, and edges are
// drawn only between vertices sharing a bag. Valid by construction.
struct PdInstance {
  Graph graph;
  PathDecomposition pd;
};

inline PdInstance random_pd_instance(int n, int positions, int edge_percent,
                                     Rng& rng) {
  std::vector<std::pair<int, int>> span(n);
  PathDecomposition pd;
  pd.bags.resize(positions);
  for (Vertex v = 0; v < n; ++v) {
    const int a = rng.below(positions);
    const int b = std::min(positions - 1, a + rng.below(3));
    span[v] = {a, b};
    for (int i = a; i <= b; ++i) pd.bags[i].insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool share = span[u].first <= span[v].second &&
                         span[v].first <= span[u].second;
      if (share && rng.chance(edge_percent)) edges.push_back({u, v});
    }
  return {Graph(n, std::move(edges)), std::move(pd)};
}

// Builds a valid (graph, tree-decomposition) pair: every vertex occupies a
// small random connected node set of a random tree, and edges are drawn only
// between vertices whose node sets intersect.
struct TdInstance {
  Graph graph;
  TreeDecomposition td;
};

inline TdInstance random_td_instance(int n, int tree_size, int edge_percent,
                                     Rng& rng) {
  Graph tree = random_tree(tree_size, rng);
  std::vector<VertexSet> bags(tree_size);
  std::vector<std::vector<char>> occupies(n,
                                          std::vector<char>(tree_size, 0));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> subtree{rng.below(tree_size)};
    occupies[v][subtree[0]] = 1;
    const int target = 1 + rng.below(3);
    while (static_cast<int>(subtree.size()) < target) {
      std::vector<int> frontier;
      for (int x : subtree)
        for (int y : tree.neighbors(x))
          if (!occupies[v][y]) frontier.push_back(y);
      if (frontier.empty()) break;
      const int pick = frontier[rng.below(static_cast<int>(frontier.size()))];
      occupies[v][pick] = 1;
      subtree.push_back(pick);
    }
    for (int x : subtree) bags[x].insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool share = false;
      for (int x = 0; x < tree_size && !share; ++x)
        share = occupies[u][x] && occupies[v][x];
      if (share && rng.chance(edge_percent)) edges.push_back({u, v});
    }
  return {Graph(n, std::move(edges)),
          TreeDecomposition{std::move(tree), std::move(bags)}};
}

// Graph on n vertices from an edge-subset bitmask of K_n, pair (u,v) with
// u < v at bit position u*n+v... flattened in lexicographic order.
inline Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask & (std::uint32_t{1} << bit)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline bool mask_connected(int n, std::uint32_t mask) {
  std::vector<std::uint32_t> adj(n, 0);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask & (std::uint32_t{1} << bit)) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
      }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t rest = frontier; rest != 0;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      next |= adj[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
}

}  // namespace treepart::testutil
