#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treepart {

using Vertex = int;

/// Undirected edge; canonical form keeps the smaller endpoint first.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  return u <= v ? Edge{u, v} : Edge{v, u};
}

/// Thrown by the exact searches when an input exceeds their hard size limit.
/// Limits are errors, never silent truncation.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(const std::string& msg, int limit)
      : std::runtime_error(msg), limit_(limit) {}
  int limit() const { return limit_; }

 private:
  int limit_;
};

/// Ordered set of vertex ids: sorted ascending, duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { canonicalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    canonicalize();
  }

  bool contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  void insert(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }
  void erase(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void canonicalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// The edge list is canonicalized and checked on construction: self-loops,
/// duplicate edges and out-of-range endpoints are rejected. Instances never
/// mutate afterwards, so they may be shared freely across threads.
class Graph {
 public:
  Graph() = default;

  Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0)
      throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
      if (u == v)
        throw std::invalid_argument("Graph: self-loop at vertex " +
                                    std::to_string(u));
      if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") out of range");
      if (v < u) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("invalid vertex id " + std::to_string(v));
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    d = std::max(d, g.degree(v));
  return d;
}

/// Vertices outside `s` adjacent to at least one vertex of `s`.
inline VertexSet neighbors_of_set(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) out.push_back(w);
  return VertexSet(std::move(out));
}

/// Maximal connected vertex sets, ordered by smallest member id.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> members;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    comps.emplace_back(std::move(members));
  }
  return comps;
}

/// Shortest-path hop distance, or nullopt when v is unreachable from u.
inline std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<int> dist(g.vertex_count(), -1);
  dist[u] = 0;
  std::vector<Vertex> frontier{u};
  while (!frontier.empty()) {
    if (dist[v] >= 0) break;
    std::vector<Vertex> next;
    for (Vertex a : frontier)
      for (Vertex b : g.neighbors(a))
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          next.push_back(b);
        }
    frontier = std::move(next);
  }
  if (dist[v] < 0) return std::nullopt;
  return dist[v];
}

/// Largest shortest-path distance. Requires a non-empty connected graph.
inline int diameter(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("diameter: empty graph");
  int best = 0;
  std::vector<int> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::vector<Vertex> frontier{s};
    int reached = 1;
    while (!frontier.empty()) {
      std::vector<Vertex> next;
      for (Vertex a : frontier)
        for (Vertex b : g.neighbors(a))
          if (dist[b] < 0) {
            dist[b] = dist[a] + 1;
            ++reached;
            next.push_back(b);
          }
      frontier = std::move(next);
    }
    if (reached != n)
      throw std::invalid_argument("diameter: graph is disconnected");
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

inline bool is_tree(const Graph& g) {
  if (g.vertex_count() < 1) return false;
  if (g.edge_count() != g.vertex_count() - 1) return false;
  return connected_components(g).size() == 1;
}

/// Subgraph induced on a vertex subset, relabelled to dense ids, with the
/// bidirectional id map.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // sub id -> parent id
  std::vector<int> to_sub;        // parent id -> sub id, -1 when dropped
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (Vertex v : keep) g.check_vertex(v);
  InducedSubgraph out;
  out.to_parent.assign(keep.begin(), keep.end());
  out.to_sub.assign(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i)
    out.to_sub[out.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (out.to_sub[u] >= 0 && out.to_sub[v] >= 0)
      edges.push_back(make_edge(out.to_sub[u], out.to_sub[v]));
  out.graph = Graph(static_cast<int>(out.to_parent.size()), std::move(edges));
  return out;
}

}  // namespace treepart
