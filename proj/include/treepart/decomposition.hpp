#pragma once

#include <string>
#include <vector>

#include "treepart/graph.hpp"

namespace treepart {

/// Sequence of bags indexed by position along a path. Validity is checked by
/// validate_path_decomposition, never assumed. Empty bags are permitted
/// anywhere; the width of an all-empty (or bagless) decomposition is -1.
struct PathDecomposition {
  std::vector<VertexSet> bags;

  friend bool operator==(const PathDecomposition&,
                         const PathDecomposition&) = default;
};

/// Bags indexed by the nodes of a tree; bags[x] belongs to tree node x.
struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;
};

/// Structured validity report. Violations are data, not errors: an invalid
/// decomposition yields a populated report, not an exception.
struct DecompositionReport {
  std::vector<Edge> uncovered_edges;      // edge-property failures
  std::vector<Vertex> missing_vertices;   // vertex appears in no bag
  std::vector<Vertex> broken_vertices;    // bag set not contiguous / connected
  std::vector<std::string> structural;    // malformed input (bad ids, no tree)

  bool valid() const {
    return uncovered_edges.empty() && missing_vertices.empty() &&
           broken_vertices.empty() && structural.empty();
  }
};

inline int pd_width(const PathDecomposition& pd) {
  std::size_t biggest = 0;
  for (const auto& bag : pd.bags) biggest = std::max(biggest, bag.size());
  return static_cast<int>(biggest) - 1;
}

inline int td_width(const TreeDecomposition& td) {
  std::size_t biggest = 0;
  for (const auto& bag : td.bags) biggest = std::max(biggest, bag.size());
  return static_cast<int>(biggest) - 1;
}

namespace detail {

// Bag positions per vertex, ascending. Out-of-range ids go to `report`.
inline std::vector<std::vector<int>> bag_positions(
    const Graph& g, const std::vector<VertexSet>& bags,
    DecompositionReport& report) {
  std::vector<std::vector<int>> pos(g.vertex_count());
  for (int b = 0; b < static_cast<int>(bags.size()); ++b)
    for (Vertex v : bags[b]) {
      if (v < 0 || v >= g.vertex_count()) {
        report.structural.push_back("bag " + std::to_string(b) +
                                    " contains invalid vertex " +
                                    std::to_string(v));
        continue;
      }
      pos[v].push_back(b);
    }
  return pos;
}

inline bool positions_intersect(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else
      return true;
  }
  return false;
}

}  // namespace detail

/// Checks the edge-property (every edge inside some bag) and the
/// vertex-property, which on a path means each vertex occupies a contiguous,
/// non-empty run of bag positions.
inline DecompositionReport validate_path_decomposition(
    const Graph& g, const PathDecomposition& pd) {
  DecompositionReport report;
  auto pos = detail::bag_positions(g, pd.bags, report);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (pos[v].empty())
      report.missing_vertices.push_back(v);
    else if (pos[v].back() - pos[v].front() + 1 !=
             static_cast<int>(pos[v].size()))
      report.broken_vertices.push_back(v);
  }
  for (const auto& [u, v] : g.edges())
    if (!detail::positions_intersect(pos[u], pos[v]))
      report.uncovered_edges.push_back({u, v});
  return report;
}

/// Tree analogue: each vertex's node set must induce a non-empty connected
/// subtree of the indexing tree.
inline DecompositionReport validate_tree_decomposition(
    const Graph& g, const TreeDecomposition& td) {
  DecompositionReport report;
  if (static_cast<int>(td.bags.size()) != td.tree.vertex_count()) {
    report.structural.push_back("bag count " + std::to_string(td.bags.size()) +
                                " does not match tree node count " +
                                std::to_string(td.tree.vertex_count()));
    return report;
  }
  if (!is_tree(td.tree)) report.structural.push_back("indexing graph is not a tree");
  auto pos = detail::bag_positions(g, td.bags, report);
  std::vector<char> in_set(td.tree.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (pos[v].empty()) {
      report.missing_vertices.push_back(v);
      continue;
    }
    for (int x : pos[v]) in_set[x] = 1;
    std::vector<int> stack{pos[v].front()};
    std::vector<char> seen(td.tree.vertex_count(), 0);
    seen[pos[v].front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (Vertex y : td.tree.neighbors(x))
        if (in_set[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != pos[v].size()) report.broken_vertices.push_back(v);
    for (int x : pos[v]) in_set[x] = 0;
  }
  for (const auto& [u, v] : g.edges())
    if (!detail::positions_intersect(pos[u], pos[v]))
      report.uncovered_edges.push_back({u, v});
  return report;
}

/// Pads the decomposition so the first and last bags are empty. Idempotent,
/// width-preserving. The input must be valid.
inline PathDecomposition normalize_ends(const Graph& g,
                                        const PathDecomposition& pd) {
  if (!validate_path_decomposition(g, pd).valid())
    throw std::invalid_argument("normalize_ends: decomposition is not valid");
  PathDecomposition out = pd;
  if (out.bags.empty()) return out;
  if (!out.bags.front().empty()) out.bags.insert(out.bags.begin(), VertexSet{});
  if (!out.bags.back().empty()) out.bags.push_back(VertexSet{});
  return out;
}

/// Decomposition restricted to the host minus `z`, relabelled onto the
/// induced subgraph's dense ids.
struct RestrictedDecomposition {
  InducedSubgraph sub;
  PathDecomposition pd;
};

inline RestrictedDecomposition restrict_decomposition(
    const Graph& g, const PathDecomposition& pd, const VertexSet& z) {
  for (Vertex v : z) g.check_vertex(v);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!z.contains(v)) keep.push_back(v);
  RestrictedDecomposition out;
  out.sub = induced_subgraph(g, VertexSet(std::move(keep)));
  out.pd.bags.reserve(pd.bags.size());
  for (const auto& bag : pd.bags) {
    std::vector<Vertex> mapped;
    for (Vertex v : bag)
      if (v >= 0 && v < g.vertex_count() && out.sub.to_sub[v] >= 0)
        mapped.push_back(out.sub.to_sub[v]);
    out.pd.bags.emplace_back(std::move(mapped));
  }
  return out;
}

/// Turns a tree-decomposition of G indexed by a tree T, together with a
/// path-decomposition of T, into a path-decomposition of G by expanding each
/// T-bag into the union of the G-bags it names. Output width is at most
/// (l+1)(k+1)-1 for input widths l and k.
inline PathDecomposition flatten(const Graph& g, const TreeDecomposition& td,
                                 const PathDecomposition& pd_of_tree) {
  if (!validate_tree_decomposition(g, td).valid())
    throw std::invalid_argument("flatten: tree-decomposition is not valid");
  if (!validate_path_decomposition(td.tree, pd_of_tree).valid())
    throw std::invalid_argument(
        "flatten: path-decomposition of the tree is not valid");
  PathDecomposition out;
  out.bags.reserve(pd_of_tree.bags.size());
  for (const auto& nodes : pd_of_tree.bags) {
    VertexSet expanded;
    for (Vertex x : nodes) expanded = set_union(expanded, td.bags[x]);
    out.bags.push_back(std::move(expanded));
  }
  return out;
}

}  // namespace treepart
