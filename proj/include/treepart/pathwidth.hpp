#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treepart/decomposition.hpp"
#include "treepart/graph.hpp"

namespace treepart {

struct PathwidthResult {
  int value = -1;
  PathDecomposition witness;  // valid, pd_width(witness) == value
};

/// Exact pathwidth via the vertex-separation formulation: dynamic programming
/// over vertex subsets, where the cost of a prefix is the number of placed
/// vertices that still have a neighbour outside the prefix. The optimal
/// ordering is converted into a path-decomposition witness.
///
/// Hard limit on the vertex count; larger instances must rely on validated
/// witness certificates instead of exact search.
inline PathwidthResult exact_pathwidth(const Graph& g, int limit = 20) {
  const int n = g.vertex_count();
  if (n > limit)
    throw SizeLimitError("exact_pathwidth: " + std::to_string(n) +
                             " vertices exceeds the exact-search limit of " +
                             std::to_string(limit),
                         limit);
  PathwidthResult result;
  if (n == 0) return result;  // empty graph: width -1, no bags

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0}
                                       : ((std::uint32_t{1} << n) - 1);

  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int boundary = 0;
    int sub_best = n + 1;
    for (std::uint32_t rest = s; rest != 0;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & ~s & full) ++boundary;
      sub_best = std::min<int>(sub_best, best[s ^ (std::uint32_t{1} << v)]);
    }
    best[s] = static_cast<std::int8_t>(std::max(boundary, sub_best));
  }
  result.value = best[full];

  // Recover an optimal ordering back to front: any v with
  // best[s \ v] <= best[s] extends an optimal layout.
  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    for (std::uint32_t rest = s; rest != 0;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (best[s ^ (std::uint32_t{1} << v)] <= best[s]) {
        order[i] = v;
        s ^= std::uint32_t{1} << v;
        break;
      }
    }
  }

  // Bag i: vertices placed before step i that still have an unplaced
  // neighbour, plus the vertex placed at step i.
  std::uint32_t placed = 0;
  for (Vertex v : order) {
    std::vector<Vertex> bag;
    for (std::uint32_t rest = placed; rest != 0;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[u] & ~placed & full) bag.push_back(u);
    }
    bag.push_back(v);
    result.witness.bags.emplace_back(std::move(bag));
    placed |= std::uint32_t{1} << v;
  }
  return result;
}

/// Exact pathwidth of a tree, same size limit.
inline PathwidthResult tree_pathwidth_exact(const Graph& t, int limit = 20) {
  if (!is_tree(t))
    throw std::invalid_argument("tree_pathwidth_exact: input is not a tree");
  return exact_pathwidth(t, limit);
}

/// Extracts a path that meets every bag of a valid decomposition of a
/// connected graph, so that removing its vertices drops the width by one.
/// Endpoints are the smallest vertices of the first and last non-empty bags,
/// joined by a deterministic BFS shortest path.
inline std::vector<Vertex> extract_path(const Graph& g,
                                        const PathDecomposition& pd) {
  if (!validate_path_decomposition(g, pd).valid())
    throw std::invalid_argument("extract_path: decomposition is not valid");
  if (g.vertex_count() == 0 || connected_components(g).size() != 1)
    throw std::invalid_argument("extract_path: graph must be connected");

  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
    if (!pd.bags[i].empty()) {
      if (first < 0) first = i;
      last = i;
    }
  // A valid decomposition of a non-empty graph has a non-empty bag.
  const Vertex from = pd.bags[first].front();
  const Vertex to = pd.bags[last].front();

  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  seen[from] = 1;
  std::vector<Vertex> frontier{from};
  while (!frontier.empty() && !seen[to]) {
    std::vector<Vertex> next;
    for (Vertex a : frontier)
      for (Vertex b : g.neighbors(a))
        if (!seen[b]) {
          seen[b] = 1;
          parent[b] = a;
          next.push_back(b);
        }
    frontier = std::move(next);
  }
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());

  // Endpoints in the end bags force the path through every bag in between.
  std::vector<char> on_path(g.vertex_count(), 0);
  for (Vertex v : path) on_path[v] = 1;
  for (int i = first; i <= last; ++i) {
    bool hit = false;
    for (Vertex v : pd.bags[i])
      if (on_path[v]) {
        hit = true;
        break;
      }
    if (!hit)
      throw std::logic_error("extract_path: path misses bag " +
                             std::to_string(i));
  }
  return path;
}

/// Rebuilds a path-decomposition of a graph from a spine path and
/// per-spine-vertex decompositions of the hanging components: each sub bag
/// gains its spine vertex, and consecutive spine pairs become separator bags.
/// Width is max(sub width + 1, 1).
///
/// `subs[i]` must cover exactly the union of the components of t - spine
/// adjacent to spine[i]; every component must touch exactly one spine vertex.
inline PathDecomposition assemble_tree_pd(
    const Graph& t, const std::vector<Vertex>& spine,
    const std::vector<PathDecomposition>& subs) {
  const int m = static_cast<int>(spine.size());
  if (m == 0) throw std::invalid_argument("assemble_tree_pd: empty spine");
  if (subs.size() != spine.size())
    throw std::invalid_argument(
        "assemble_tree_pd: need one sub-decomposition per spine vertex");
  std::vector<int> spine_index(t.vertex_count(), -1);
  for (int i = 0; i < m; ++i) {
    t.check_vertex(spine[i]);
    if (spine_index[spine[i]] >= 0)
      throw std::invalid_argument("assemble_tree_pd: spine repeats a vertex");
    spine_index[spine[i]] = i;
  }
  for (int i = 0; i + 1 < m; ++i)
    if (!t.has_edge(spine[i], spine[i + 1]))
      throw std::invalid_argument("assemble_tree_pd: spine is not a path");

  // Assign each component of t - spine to its unique attachment vertex.
  std::vector<int> attach(t.vertex_count(), -1);  // vertex -> spine position
  std::vector<char> seen(t.vertex_count(), 0);
  for (Vertex v : spine) seen[v] = 1;
  for (Vertex start = 0; start < t.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> members, stack{start};
    seen[start] = 1;
    int at = -1;
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      members.push_back(a);
      for (Vertex b : t.neighbors(a)) {
        if (spine_index[b] >= 0) {
          if (at >= 0 && at != spine_index[b])
            throw std::invalid_argument(
                "assemble_tree_pd: component adjacent to more than one spine "
                "vertex");
          at = spine_index[b];
        } else if (!seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    if (at < 0)
      throw std::invalid_argument(
          "assemble_tree_pd: component not attached to the spine");
    for (Vertex v : members) attach[v] = at;
  }

  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> all_ids;
    for (const auto& bag : subs[i].bags)
      all_ids.insert(all_ids.end(), bag.begin(), bag.end());
    VertexSet covered(std::move(all_ids));
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
      if (attach[v] == i) expected.push_back(v);
    if (covered != VertexSet(std::move(expected)))
      throw std::invalid_argument(
          "assemble_tree_pd: sub-decomposition " + std::to_string(i) +
          " does not cover the components hanging off its spine vertex");
  }

  PathDecomposition out;
  for (int i = 0; i < m; ++i) {
    for (const auto& bag : subs[i].bags) {
      VertexSet extended = bag;
      extended.insert(spine[i]);
      out.bags.push_back(std::move(extended));
    }
    if (i + 1 < m) out.bags.push_back(VertexSet{spine[i], spine[i + 1]});
  }
  if (out.bags.empty()) out.bags.push_back(VertexSet{spine[0]});
  return out;
}

}  // namespace treepart
