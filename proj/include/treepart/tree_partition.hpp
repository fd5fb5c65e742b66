#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treepart/decomposition.hpp"
#include "treepart/graph.hpp"
#include "treepart/pathwidth.hpp"

namespace treepart {

/// Partition of the host's vertices into bags indexed by the nodes of a tree.
/// The optional witness is a path-decomposition of `tree` certifying its
/// pathwidth without exact search.
struct TreePartition {
  Graph tree;
  std::vector<VertexSet> bags;
  std::optional<PathDecomposition> witness;
};

struct PartitionReport {
  std::vector<Vertex> missing_vertices;
  std::vector<Vertex> duplicated_vertices;
  std::vector<Edge> nonadjacent_edges;  // endpoints in non-adjacent bags
  std::vector<std::string> structural;

  bool valid() const {
    return missing_vertices.empty() && duplicated_vertices.empty() &&
           nonadjacent_edges.empty() && structural.empty();
  }
};

/// Width of a tree-partition is the largest bag size (no minus one).
inline int tp_width(const TreePartition& tp) {
  std::size_t w = 0;
  for (const auto& bag : tp.bags) w = std::max(w, bag.size());
  return static_cast<int>(w);
}

inline PartitionReport validate_tree_partition(const Graph& g,
                                               const TreePartition& tp) {
  PartitionReport report;
  if (static_cast<int>(tp.bags.size()) != tp.tree.vertex_count()) {
    report.structural.push_back(
        "bag count " + std::to_string(tp.bags.size()) +
        " does not match tree node count " +
        std::to_string(tp.tree.vertex_count()));
    return report;
  }
  if (!is_tree(tp.tree))
    report.structural.push_back("indexing graph is not a tree");
  std::vector<int> owner(g.vertex_count(), -1);
  std::vector<char> dup(g.vertex_count(), 0);
  for (int x = 0; x < static_cast<int>(tp.bags.size()); ++x)
    for (Vertex v : tp.bags[x]) {
      if (v < 0 || v >= g.vertex_count()) {
        report.structural.push_back("bag " + std::to_string(x) +
                                    " contains invalid vertex " +
                                    std::to_string(v));
        continue;
      }
      if (owner[v] < 0)
        owner[v] = x;
      else if (!dup[v]) {
        dup[v] = 1;
        report.duplicated_vertices.push_back(v);
      }
    }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (owner[v] < 0) report.missing_vertices.push_back(v);
  // Adjacency is still checked against a non-tree indexing graph, so a
  // deleted tree edge surfaces both as structural and as edge violations.
  for (const auto& [u, v] : g.edges()) {
    if (owner[u] < 0 || owner[v] < 0) continue;
    if (owner[u] == owner[v]) continue;
    if (!tp.tree.has_edge(owner[u], owner[v]))
      report.nonadjacent_edges.push_back({u, v});
  }
  return report;
}

/// Bag-size recurrence driving the construction:
///   f(0,d,s) = max(s,1)
///   f(k,d,s) = max(s(k+1), 2(k+1) + f(k-1,d,4d(k+1)))
/// For s <= 4d(k+1) and d >= 1 it satisfies f(k,d,s) <= 4d(k+1)^2.
inline long long f_bound(int k, long long d, long long s) {
  if (k < 0 || d < 0 || s < 0)
    throw std::invalid_argument("f_bound: arguments must be non-negative");
  if (k == 0) return std::max<long long>(s, 1);
  return std::max(s * (k + 1), 2LL * (k + 1) + f_bound(k - 1, d, 4 * d * (k + 1)));
}

/// A path-shaped tree-partition of width c forces |V| <= c * (diameter + 1).
/// Returns false only on an internally inconsistent partition.
inline bool check_path_partition_diameter(const Graph& g,
                                          const TreePartition& pp) {
  if (!validate_tree_partition(g, pp).valid())
    throw std::invalid_argument(
        "check_path_partition_diameter: partition is not valid");
  if (!is_tree(pp.tree) || max_degree(pp.tree) > 2)
    throw std::invalid_argument(
        "check_path_partition_diameter: indexing tree is not a path");
  const long long c = tp_width(pp);
  const long long diam = diameter(g);  // throws on disconnected input
  return g.vertex_count() <= c * (diam + 1);
}

// ---------------------------------------------------------------------------
// Construction internals. These mirror the recursive proof step by step and
// are exposed so the audit and the tests can exercise them in isolation.
// ---------------------------------------------------------------------------

/// Minimal set of bag positions containing the first and last position whose
/// bags jointly cover `seed`. Greedy: leftmost covering bag per seed vertex,
/// then left-to-right pruning until inclusion-minimal.
inline std::vector<int> select_minimal_x(const PathDecomposition& pd,
                                         const VertexSet& seed) {
  const int p = static_cast<int>(pd.bags.size());
  if (p == 0)
    throw std::invalid_argument("select_minimal_x: no bags");
  std::vector<char> chosen(p, 0);
  chosen[0] = chosen[p - 1] = 1;
  for (Vertex s : seed) {
    int found = -1;
    for (int i = 0; i < p && found < 0; ++i)
      if (pd.bags[i].contains(s)) found = i;
    if (found < 0)
      throw std::invalid_argument("select_minimal_x: seed vertex " +
                                  std::to_string(s) +
                                  " is not covered by any bag");
    chosen[found] = 1;
  }
  auto covered_without = [&](int skip) {
    for (Vertex s : seed) {
      bool ok = false;
      for (int i = 0; i < p && !ok; ++i)
        if (chosen[i] && i != skip && pd.bags[i].contains(s)) ok = true;
      if (!ok) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i + 1 < p; ++i)
      if (chosen[i] && covered_without(i)) {
        chosen[i] = 0;
        changed = true;
      }
  }
  std::vector<int> x;
  for (int i = 0; i < p; ++i)
    if (chosen[i]) x.push_back(i);
  return x;
}

/// Maximal set of positions outside X whose bags are disjoint from every X
/// bag and from each other. Single left-to-right greedy sweep.
inline std::vector<int> select_maximal_y(const PathDecomposition& pd,
                                         const std::vector<int>& x) {
  Vertex top = -1;
  for (const auto& bag : pd.bags)
    if (!bag.empty()) top = std::max(top, bag.back());
  std::vector<char> blocked(top + 1, 0);
  std::vector<char> in_x(pd.bags.size(), 0);
  for (int i : x) {
    in_x[i] = 1;
    for (Vertex v : pd.bags[i]) blocked[v] = 1;
  }
  std::vector<int> y;
  for (int a = 0; a < static_cast<int>(pd.bags.size()); ++a) {
    if (in_x[a]) continue;
    bool clash = false;
    for (Vertex v : pd.bags[a])
      if (blocked[v]) {
        clash = true;
        break;
      }
    if (clash) continue;
    y.push_back(a);
    for (Vertex v : pd.bags[a]) blocked[v] = 1;
  }
  return y;
}

/// Splits the contracted path into maximal subpaths whose endpoints lie in X
/// and whose interiors avoid X. The subpaths partition the contracted edges.
inline std::vector<std::vector<int>> key_subpaths(
    const std::vector<int>& contracted, const std::vector<int>& x) {
  std::vector<char> in_x_pos(contracted.size(), 0);
  {
    std::size_t j = 0;
    for (std::size_t i = 0; i < contracted.size(); ++i) {
      while (j < x.size() && x[j] < contracted[i]) ++j;
      if (j < x.size() && x[j] == contracted[i]) in_x_pos[i] = 1;
    }
  }
  if (contracted.empty() || !in_x_pos.front() || !in_x_pos.back())
    throw std::invalid_argument(
        "key_subpaths: contracted path must start and end in X");
  std::vector<std::vector<int>> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i < contracted.size(); ++i)
    if (in_x_pos[i]) {
      out.emplace_back(contracted.begin() + start, contracted.begin() + i + 1);
      start = i;
    }
  return out;
}

/// Node levels and the edge-to-level map of one key subpath. Nodes are
/// levelled by hop distance from the nearer endpoint; the edge between
/// levels i and i+1 (or inside level m) maps to level i+1 (resp. m+1).
struct LevelAssignment {
  std::vector<std::vector<int>> level_nodes;  // index i: nodes at distance i
  std::vector<std::vector<std::pair<int, int>>> level_edges;  // index 0 empty
};

inline LevelAssignment map_edges_to_levels(const std::vector<int>& q) {
  if (q.size() < 2)
    throw std::invalid_argument("map_edges_to_levels: subpath needs an edge");
  const int hops = static_cast<int>(q.size()) - 1;
  std::vector<int> dist(q.size());
  for (int i = 0; i <= hops; ++i) dist[i] = std::min(i, hops - i);
  const int m = hops / 2;
  LevelAssignment out;
  out.level_nodes.resize(m + 1);
  out.level_edges.resize(m + 2);
  for (int i = 0; i <= hops; ++i) out.level_nodes[dist[i]].push_back(q[i]);
  for (int i = 0; i < hops; ++i) {
    const int lvl = std::min(dist[i], dist[i + 1]) + 1;
    out.level_edges[lvl].push_back({q[i], q[i + 1]});
  }
  return out;
}

/// Per-key-subpath construction record.
struct TraceSubpath {
  std::vector<int> nodes;                     // bag positions along Q
  std::vector<std::vector<int>> level_nodes;  // Y_{Q,i}
  std::vector<std::vector<std::pair<int, int>>> level_edges;  // E_{Q,i}
  std::vector<VertexSet> level_vertices;      // V(G_{Q,i}), level-local ids
  std::vector<VertexSet> level_boundary;      // S_{Q,i}
  std::vector<int> level_tree_nodes;          // l_{Q,i} in this level's tree
  std::vector<int> child_levels;              // trace index per level, -1 none
};

/// One recursion level, self-contained: its own graph, the normalized
/// decomposition it worked on, every intermediate set of the step, and the
/// level-local output. Everything the bound audit needs is recorded here.
struct TraceLevel {
  int depth = 0;
  int parent = -1;
  int k = 0;
  long long degree_bound = 0;
  bool base_case = false;
  Graph graph;
  std::vector<Vertex> to_parent;  // local vertex id -> parent level id
  VertexSet seed;
  PathDecomposition pd;  // normalized decomposition used by this level
  std::vector<int> x_nodes;
  std::vector<int> y_nodes;
  VertexSet z;
  std::vector<int> contracted;             // P' as bag positions
  std::vector<VertexSet> edge_vertices;    // V(G_e) per contracted edge
  std::vector<VertexSet> edge_boundary;    // S_e per contracted edge
  std::vector<TraceSubpath> subpaths;
  int alpha = 0;          // root node of the level-local tree
  TreePartition result;   // level-local output, witness always present
};

struct ConstructionTrace {
  std::vector<TraceLevel> levels;  // levels[0] is the outermost call
};

struct BuildResult {
  TreePartition partition;
  int root = 0;  // node whose bag contains the seed set
  ConstructionTrace trace;
};

namespace detail {

inline int build_level(ConstructionTrace& trace, Graph graph,
                       const PathDecomposition& pd_in, VertexSet seed,
                       long long degree_bound, int depth, int parent,
                       std::vector<Vertex> to_parent) {
  const int index = static_cast<int>(trace.levels.size());
  trace.levels.emplace_back();
  TraceLevel level;
  level.depth = depth;
  level.parent = parent;
  level.degree_bound = degree_bound;
  level.seed = seed;
  level.to_parent = std::move(to_parent);

  {
    auto report = validate_path_decomposition(graph, pd_in);
    if (!report.valid())
      throw std::invalid_argument(
          "build_tree_partition: path decomposition is not valid for the "
          "graph");
  }
  const int k = pd_width(pd_in);

  if (k <= 0) {
    // Base: the graph is edgeless. Emit the path-partition
    // (seed, {v_1}, ..., {v_m}) with its natural witness.
    level.base_case = true;
    level.k = 0;
    level.pd = pd_in;
    std::vector<VertexSet> bags{seed};
    std::vector<Edge> tree_edges;
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
      if (!seed.contains(v)) {
        tree_edges.push_back({static_cast<int>(bags.size()) - 1,
                              static_cast<int>(bags.size())});
        bags.push_back(VertexSet{v});
      }
    Graph tree(static_cast<int>(bags.size()), std::move(tree_edges));
    std::vector<Vertex> spine(tree.vertex_count());
    std::iota(spine.begin(), spine.end(), 0);
    auto witness = assemble_tree_pd(
        tree, spine, std::vector<PathDecomposition>(tree.vertex_count()));
    level.result = TreePartition{std::move(tree), std::move(bags),
                                 std::move(witness)};
    level.graph = std::move(graph);
    trace.levels[index] = std::move(level);
    return index;
  }

  level.k = k;
  const PathDecomposition pd = normalize_ends(graph, pd_in);
  level.pd = pd;
  const int positions = static_cast<int>(pd.bags.size());

  level.x_nodes = select_minimal_x(pd, seed);
  level.y_nodes = select_maximal_y(pd, level.x_nodes);

  VertexSet z;
  for (int i : level.x_nodes) z = set_union(z, pd.bags[i]);
  for (int i : level.y_nodes) z = set_union(z, pd.bags[i]);
  level.z = z;

  std::vector<int> contracted(level.x_nodes);
  contracted.insert(contracted.end(), level.y_nodes.begin(),
                    level.y_nodes.end());
  std::sort(contracted.begin(), contracted.end());
  level.contracted = contracted;

  // V(G_e) and S_e per contracted edge. Vertices of G - Z live in the bags
  // strictly between consecutive contracted positions; each belongs to
  // exactly one such stretch.
  const int edge_count = static_cast<int>(contracted.size()) - 1;
  std::vector<char> in_z(graph.vertex_count(), 0);
  for (Vertex v : z) in_z[v] = 1;
  std::vector<int> owner_edge(graph.vertex_count(), -1);
  level.edge_vertices.resize(edge_count);
  level.edge_boundary.resize(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    std::vector<Vertex> members;
    for (int a = contracted[e] + 1; a < contracted[e + 1]; ++a)
      for (Vertex v : pd.bags[a])
        if (!in_z[v] && owner_edge[v] < 0) {
          owner_edge[v] = e;
          members.push_back(v);
        }
    level.edge_vertices[e] = VertexSet(std::move(members));
    std::vector<Vertex> boundary;
    for (Vertex v : level.edge_vertices[e])
      for (Vertex w : graph.neighbors(v))
        if (owner_edge[w] != e) {
          boundary.push_back(v);
          break;
        }
    level.edge_boundary[e] = VertexSet(std::move(boundary));
  }

  // Tree skeleton: alpha, then the Q' spine nodes of every key subpath.
  const auto keys = key_subpaths(contracted, level.x_nodes);
  std::vector<int> edge_of_position(positions, -1);
  for (int e = 0; e < edge_count; ++e) edge_of_position[contracted[e]] = e;

  int next_node = 1;
  std::vector<Edge> tree_edges;
  level.subpaths.resize(keys.size());
  for (std::size_t qi = 0; qi < keys.size(); ++qi) {
    auto& sp = level.subpaths[qi];
    sp.nodes = keys[qi];
    auto assignment = map_edges_to_levels(keys[qi]);
    sp.level_nodes = std::move(assignment.level_nodes);
    sp.level_edges = std::move(assignment.level_edges);
    const int top = static_cast<int>(sp.level_edges.size()) - 1;  // m + 1
    sp.level_tree_nodes.assign(top + 1, level.alpha);
    for (int i = 1; i <= top; ++i) {
      sp.level_tree_nodes[i] = next_node++;
      tree_edges.push_back({sp.level_tree_nodes[i - 1], sp.level_tree_nodes[i]});
    }
    sp.level_vertices.resize(top + 1);
    sp.level_boundary.resize(top + 1);
    sp.child_levels.assign(top + 1, -1);
    for (int i = 1; i <= top; ++i) {
      VertexSet verts, boundary;
      for (const auto& [a, b] : sp.level_edges[i]) {
        const int e = edge_of_position[a];
        verts = set_union(verts, level.edge_vertices[e]);
        boundary = set_union(boundary, level.edge_boundary[e]);
      }
      sp.level_vertices[i] = std::move(verts);
      sp.level_boundary[i] = std::move(boundary);
    }
  }

  // Recurse on each non-empty G_{Q,i} with the restricted, relabelled
  // decomposition, then graft the child tree with its root identified with
  // l_{Q,i}. Bags collected level-locally.
  std::vector<VertexSet> bags(next_node);
  {
    VertexSet root_bag;
    for (int i : level.x_nodes) root_bag = set_union(root_bag, pd.bags[i]);
    bags[level.alpha] = std::move(root_bag);
  }

  struct Graft {
    std::size_t qi;
    int lvl;
    int child;                   // trace index
    std::vector<int> node_map;   // child tree node -> level tree node
  };
  std::vector<Graft> grafts;

  for (std::size_t qi = 0; qi < keys.size(); ++qi) {
    auto& sp = level.subpaths[qi];
    const int top = static_cast<int>(sp.level_edges.size()) - 1;
    for (int i = 1; i <= top; ++i) {
      VertexSet bag;
      if (i < static_cast<int>(sp.level_nodes.size()))
        for (int y : sp.level_nodes[i]) bag = set_union(bag, pd.bags[y]);
      if (sp.level_vertices[i].empty()) {
        bags[sp.level_tree_nodes[i]] = std::move(bag);
        continue;
      }
      auto sub = induced_subgraph(graph, sp.level_vertices[i]);
      // Bags of the child decomposition: the stretch of positions spanned by
      // the mapped edges, intersected with the child's vertex set.
      int lo = positions, hi = -1;
      for (const auto& [a, b] : sp.level_edges[i]) {
        lo = std::min(lo, a + 1);
        hi = std::max(hi, b - 1);
      }
      PathDecomposition child_pd;
      for (int a = lo; a <= hi; ++a) {
        std::vector<Vertex> mapped;
        for (Vertex v : pd.bags[a])
          if (sub.to_sub[v] >= 0) mapped.push_back(sub.to_sub[v]);
        child_pd.bags.emplace_back(std::move(mapped));
      }
      std::vector<Vertex> child_seed;
      for (Vertex v : sp.level_boundary[i]) child_seed.push_back(sub.to_sub[v]);
      const int child = build_level(trace, sub.graph, child_pd,
                                    VertexSet(std::move(child_seed)),
                                    degree_bound, depth + 1, index,
                                    sub.to_parent);
      sp.child_levels[i] = child;
      const auto& child_level = trace.levels[child];
      const auto& child_tp = child_level.result;

      std::vector<int> node_map(child_tp.tree.vertex_count(), -1);
      node_map[child_level.alpha] = sp.level_tree_nodes[i];
      for (int c = 0; c < child_tp.tree.vertex_count(); ++c)
        if (c != child_level.alpha) node_map[c] = next_node++;
      bags.resize(next_node);
      for (const auto& [a, b] : child_tp.tree.edges())
        tree_edges.push_back(make_edge(node_map[a], node_map[b]));
      for (int c = 0; c < child_tp.tree.vertex_count(); ++c) {
        std::vector<Vertex> lifted;
        for (Vertex v : child_tp.bags[c])
          lifted.push_back(child_level.to_parent[v]);
        VertexSet lifted_set(std::move(lifted));
        if (c == child_level.alpha)
          bags[node_map[c]] = set_union(bag, lifted_set);
        else
          bags[node_map[c]] = std::move(lifted_set);
      }
      grafts.push_back({qi, i, child, std::move(node_map)});
    }
  }

  Graph tree(next_node, std::move(tree_edges));

  // Witness: assemble each component of T - alpha along its Q' spine from
  // the grafted children's witnesses, concatenate, then push alpha into a
  // final assembly over the one-vertex spine (alpha).
  PathDecomposition rest;
  for (std::size_t qi = 0; qi < keys.size(); ++qi) {
    const auto& sp = level.subpaths[qi];
    const int top = static_cast<int>(sp.level_edges.size()) - 1;
    std::vector<Vertex> comp_nodes(sp.level_tree_nodes.begin() + 1,
                                   sp.level_tree_nodes.end());
    std::vector<PathDecomposition> hang(top);  // per spine node l_{Q,1..top}
    for (const auto& graft : grafts) {
      if (graft.qi != qi) continue;
      const auto& child_level = trace.levels[graft.child];
      const auto& child_tp = child_level.result;
      for (int c = 0; c < child_tp.tree.vertex_count(); ++c)
        if (c != child_level.alpha) comp_nodes.push_back(graft.node_map[c]);
      auto stripped =
          restrict_decomposition(child_tp.tree, *child_tp.witness,
                                 VertexSet{child_level.alpha});
      PathDecomposition lifted;
      for (const auto& bag : stripped.pd.bags) {
        std::vector<Vertex> ids;
        for (Vertex v : bag)
          ids.push_back(graft.node_map[stripped.sub.to_parent[v]]);
        lifted.bags.emplace_back(std::move(ids));
      }
      hang[graft.lvl - 1] = std::move(lifted);
    }
    auto comp = induced_subgraph(tree, VertexSet(std::move(comp_nodes)));
    std::vector<Vertex> spine_local;
    for (int i = 1; i <= top; ++i)
      spine_local.push_back(comp.to_sub[sp.level_tree_nodes[i]]);
    std::vector<PathDecomposition> subs_local(top);
    for (int i = 0; i < top; ++i)
      for (const auto& bag : hang[i].bags) {
        std::vector<Vertex> ids;
        for (Vertex v : bag) ids.push_back(comp.to_sub[v]);
        subs_local[i].bags.emplace_back(std::move(ids));
      }
    auto comp_pd = assemble_tree_pd(comp.graph, spine_local, subs_local);
    for (const auto& bag : comp_pd.bags) {
      std::vector<Vertex> ids;
      for (Vertex v : bag) ids.push_back(comp.to_parent[v]);
      rest.bags.emplace_back(std::move(ids));
    }
  }
  std::vector<PathDecomposition> rest_subs;
  rest_subs.push_back(std::move(rest));
  auto witness = assemble_tree_pd(tree, {level.alpha}, rest_subs);

  level.result = TreePartition{std::move(tree), std::move(bags),
                               std::move(witness)};
  level.graph = std::move(graph);
  trace.levels[index] = std::move(level);
  return index;
}

}  // namespace detail

/// Builds a tree-partition of `g` from a valid path-decomposition of width k,
/// with every bag of size at most f_bound(k, d, |seed|), the seed set inside
/// the root bag, and a witness path-decomposition of the indexing tree of
/// width at most 2k+1. Deterministic; the full recursion is recorded in the
/// returned trace.
inline BuildResult build_tree_partition(const Graph& g,
                                        const PathDecomposition& pd,
                                        const VertexSet& seed,
                                        long long degree_bound) {
  for (Vertex v : seed) g.check_vertex(v);
  if (max_degree(g) > degree_bound)
    throw std::invalid_argument(
        "build_tree_partition: maximum degree " +
        std::to_string(max_degree(g)) + " exceeds the degree bound " +
        std::to_string(degree_bound));
  BuildResult out;
  std::vector<Vertex> identity(g.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);
  detail::build_level(out.trace, g, pd, seed, degree_bound, 0, -1,
                      std::move(identity));
  out.partition = out.trace.levels[0].result;
  out.root = out.trace.levels[0].alpha;
  return out;
}

// ---------------------------------------------------------------------------
// Trace audit: re-checks every bound of the construction from the recorded
// trace. Returns human-readable problem strings; empty means clean.
// ---------------------------------------------------------------------------

inline std::vector<std::string> audit_construction(const BuildResult& build) {
  std::vector<std::string> problems;
  const auto note = [&](int level, const std::string& what) {
    problems.push_back("level " + std::to_string(level) + ": " + what);
  };

  for (int li = 0; li < static_cast<int>(build.trace.levels.size()); ++li) {
    const auto& lv = build.trace.levels[li];
    const Graph& g = lv.graph;
    const long long d = lv.degree_bound;
    const int k = lv.k;

    // Level output checks, shared by base and recursive levels.
    const auto rep = validate_tree_partition(g, lv.result);
    if (!rep.valid()) note(li, "level output is not a valid tree-partition");
    if (tp_width(lv.result) > f_bound(k, d, static_cast<long long>(lv.seed.size())))
      note(li, "width " + std::to_string(tp_width(lv.result)) +
                   " exceeds f_bound");
    for (Vertex v : lv.seed)
      if (!lv.result.bags[lv.alpha].contains(v)) {
        note(li, "seed vertex escapes the root bag");
        break;
      }
    if (!lv.result.witness) {
      note(li, "missing witness");
      continue;
    }
    if (!validate_path_decomposition(lv.result.tree, *lv.result.witness).valid())
      note(li, "witness is not a valid path-decomposition of the tree");
    if (pd_width(*lv.result.witness) > 2 * k + 1)
      note(li, "witness width " + std::to_string(pd_width(*lv.result.witness)) +
                   " exceeds 2k+1 = " + std::to_string(2 * k + 1));

    if (lv.base_case) {
      if (g.edge_count() != 0) note(li, "base case on a non-edgeless graph");
      continue;
    }

    if (!validate_path_decomposition(g, lv.pd).valid())
      note(li, "recorded decomposition invalid");
    if (lv.pd.bags.empty() || !lv.pd.bags.front().empty() ||
        !lv.pd.bags.back().empty())
      note(li, "recorded decomposition is not end-normalized");
    const int p = static_cast<int>(lv.pd.bags.size());

    // X: endpoints, seed coverage, inclusion-minimality, size bound.
    if (lv.x_nodes.empty() || lv.x_nodes.front() != 0 ||
        lv.x_nodes.back() != p - 1)
      note(li, "X misses an end of the path");
    VertexSet x_union;
    for (int i : lv.x_nodes) x_union = set_union(x_union, lv.pd.bags[i]);
    for (Vertex s : lv.seed)
      if (!x_union.contains(s)) {
        note(li, "X bags do not cover the seed set");
        break;
      }
    for (int i : lv.x_nodes) {
      if (i == 0 || i == p - 1) continue;
      bool removable = true;
      for (Vertex s : lv.seed) {
        bool covered = false;
        for (int j : lv.x_nodes)
          if (j != i && lv.pd.bags[j].contains(s)) {
            covered = true;
            break;
          }
        if (!covered) {
          removable = false;
          break;
        }
      }
      if (removable) {
        note(li, "X is not inclusion-minimal at position " + std::to_string(i));
        break;
      }
    }
    if (static_cast<long long>(x_union.size()) >
        static_cast<long long>(lv.seed.size()) * (k + 1))
      note(li, "|union of X bags| exceeds |S|(k+1)");

    // Y: disjointness constraints plus maximality.
    for (std::size_t a = 0; a < lv.y_nodes.size(); ++a) {
      for (int xi : lv.x_nodes)
        if (!disjoint(lv.pd.bags[lv.y_nodes[a]], lv.pd.bags[xi]))
          note(li, "Y bag intersects an X bag");
      for (std::size_t b = a + 1; b < lv.y_nodes.size(); ++b)
        if (!disjoint(lv.pd.bags[lv.y_nodes[a]], lv.pd.bags[lv.y_nodes[b]]))
          note(li, "two Y bags intersect");
    }
    {
      std::vector<char> selected(p, 0);
      for (int i : lv.x_nodes) selected[i] = 1;
      for (int i : lv.y_nodes) selected[i] = 1;
      VertexSet chosen_union;
      for (int i = 0; i < p; ++i)
        if (selected[i]) chosen_union = set_union(chosen_union, lv.pd.bags[i]);
      for (int a = 0; a < p; ++a) {
        if (selected[a]) continue;
        if (disjoint(lv.pd.bags[a], chosen_union))
          note(li, "Y is not maximal: position " + std::to_string(a) +
                       " could be added");
      }
    }

    // Z and the width drop of the restricted decomposition.
    VertexSet z_expected = x_union;
    for (int i : lv.y_nodes)
      z_expected = set_union(z_expected, lv.pd.bags[i]);
    if (!(z_expected == lv.z)) note(li, "Z differs from the union of X,Y bags");
    {
      auto restricted = restrict_decomposition(g, lv.pd, lv.z);
      if (!validate_path_decomposition(restricted.sub.graph, restricted.pd)
               .valid())
        note(li, "restricted decomposition invalid");
      if (pd_width(restricted.pd) > k - 1)
        note(li, "restricted decomposition width exceeds k-1");
    }

    // Contracted path and the per-edge subgraphs.
    {
      std::vector<int> expected(lv.x_nodes);
      expected.insert(expected.end(), lv.y_nodes.begin(), lv.y_nodes.end());
      std::sort(expected.begin(), expected.end());
      if (expected != lv.contracted)
        note(li, "contracted path differs from sorted X union Y");
    }
    const int edge_count = static_cast<int>(lv.contracted.size()) - 1;
    std::vector<int> owner(g.vertex_count(), -1);
    for (int e = 0; e < edge_count; ++e)
      for (Vertex v : lv.edge_vertices[e]) {
        if (lv.z.contains(v)) note(li, "G_e contains a vertex of Z");
        if (owner[v] >= 0) note(li, "G_e subgraphs are not disjoint");
        owner[v] = e;
      }
    for (const auto& [u, v] : g.edges())
      if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
        note(li, "edge between distinct G_e subgraphs");
    for (int e = 0; e < edge_count; ++e) {
      if (static_cast<long long>(lv.edge_boundary[e].size()) >
          2LL * (k + 1) * d)
        note(li, "|S_e| exceeds 2(k+1)d");
      // Dual route: S_e must equal N_G(D_z1 union D_z2) restricted to G_e.
      const VertexSet dz = set_union(lv.pd.bags[lv.contracted[e]],
                                     lv.pd.bags[lv.contracted[e + 1]]);
      const VertexSet via_neighbors =
          set_intersection(neighbors_of_set(g, dz), lv.edge_vertices[e]);
      if (!(via_neighbors == lv.edge_boundary[e]))
        note(li, "S_e disagrees with N_G(D_z1 u D_z2) restricted to G_e");
    }

    // Key subpaths partition the contracted edges, in order.
    {
      std::vector<std::pair<int, int>> walked;
      for (const auto& sp : lv.subpaths)
        for (std::size_t i = 0; i + 1 < sp.nodes.size(); ++i)
          walked.push_back({sp.nodes[i], sp.nodes[i + 1]});
      std::vector<std::pair<int, int>> expected;
      for (int e = 0; e < edge_count; ++e)
        expected.push_back({lv.contracted[e], lv.contracted[e + 1]});
      if (walked != expected)
        note(li, "key subpaths do not partition the contracted edges");
    }

    // Per-subpath level bounds and bag sizes.
    const long long child_cap = f_bound(k - 1, d, 4 * d * (k + 1));
    for (const auto& sp : lv.subpaths) {
      for (const auto& nodes : sp.level_nodes)
        if (nodes.size() > 2) note(li, "|Y_{Q,i}| exceeds 2");
      for (const auto& edges : sp.level_edges)
        if (edges.size() > 2) note(li, "|E_{Q,i}| exceeds 2");
      for (const auto& boundary : sp.level_boundary)
        if (static_cast<long long>(boundary.size()) > 4 * (k + 1) * d)
          note(li, "|S_{Q,i}| exceeds 4(k+1)d");
      for (std::size_t i = 1; i < sp.level_tree_nodes.size(); ++i) {
        const auto& bag = lv.result.bags[sp.level_tree_nodes[i]];
        if (static_cast<long long>(bag.size()) > 2LL * (k + 1) + child_cap)
          note(li, "|B_l| exceeds 2(k+1) + f(k-1,d,4d(k+1))");
      }
      for (std::size_t i = 1; i < sp.child_levels.size(); ++i) {
        if (sp.child_levels[i] < 0) continue;
        const auto& child = build.trace.levels[sp.child_levels[i]];
        if (child.k > k - 1) note(li, "child recursion did not shrink k");
        std::vector<Vertex> image(child.to_parent);
        if (!(VertexSet(std::move(image)) == sp.level_vertices[i]))
          note(li, "child vertex set differs from V(G_{Q,i})");
        std::vector<Vertex> lifted_seed;
        for (Vertex v : child.seed) lifted_seed.push_back(child.to_parent[v]);
        if (!(VertexSet(std::move(lifted_seed)) == sp.level_boundary[i]))
          note(li, "child seed differs from S_{Q,i}");
      }
    }

    // Root bag is exactly the union of the X bags.
    if (!(lv.result.bags[lv.alpha] == x_union))
      note(li, "root bag differs from the union of X bags");
  }
  return problems;
}

}  // namespace treepart
