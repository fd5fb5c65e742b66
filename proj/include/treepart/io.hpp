#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "treepart/decomposition.hpp"
#include "treepart/graph.hpp"
#include "treepart/tree_partition.hpp"

namespace treepart {

inline constexpr const char* kToolVersion = "0.1.0";

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Text graph format: one header line `p <n> <m>`, then m lines `e <u> <v>`
// with 1-based vertex ids. `c` lines are comments. Self-loops and repeated
// edges are rejected, not deduplicated.
// ---------------------------------------------------------------------------

inline Graph read_graph_text(std::istream& in) {
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (n >= 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": repeated problem line");
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": malformed problem line");
    } else if (tag == "e") {
      if (n < 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": edge before problem line");
      int u, v;
      if (!(fields >> u >> v))
        throw ParseError("line " + std::to_string(lineno) +
                         ": malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("line " + std::to_string(lineno) +
                         ": edge endpoint out of range");
      edges.push_back(make_edge(u - 1, v - 1));
    } else {
      throw ParseError("line " + std::to_string(lineno) +
                       ": unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& bad) {
    throw ParseError(bad.what());
  }
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph_text(in);
}

inline void write_graph_text(const Graph& g, std::ostream& out) {
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges())
    out << "e " << u + 1 << " " << v + 1 << "\n";
}

// ---------------------------------------------------------------------------
// JSON artifacts.
// ---------------------------------------------------------------------------

inline nlohmann::json bags_to_json(const std::vector<VertexSet>& bags) {
  auto out = nlohmann::json::array();
  for (const auto& bag : bags) out.push_back(bag.ids());
  return out;
}

inline nlohmann::json tree_to_json(const Graph& tree) {
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : tree.edges())
    edges.push_back(nlohmann::json::array({a, b}));
  return {{"nodes", tree.vertex_count()}, {"edges", edges}};
}

inline nlohmann::json to_json(const PathDecomposition& pd) {
  return {{"kind", "path-decomposition"}, {"bags", bags_to_json(pd.bags)}};
}

inline nlohmann::json indexed_bags_to_json(const std::vector<VertexSet>& bags) {
  nlohmann::json out = nlohmann::json::object();
  for (int x = 0; x < static_cast<int>(bags.size()); ++x)
    out[std::to_string(x)] = bags[x].ids();
  return out;
}

inline nlohmann::json to_json(const TreeDecomposition& td) {
  return {{"kind", "tree-decomposition"},
          {"tree", tree_to_json(td.tree)},
          {"bags", indexed_bags_to_json(td.bags)}};
}

inline nlohmann::json to_json(const TreePartition& tp) {
  nlohmann::json out = {{"kind", "tree-partition"},
                        {"tree", tree_to_json(tp.tree)},
                        {"bags", indexed_bags_to_json(tp.bags)}};
  out["witness"] = tp.witness ? to_json(*tp.witness) : nlohmann::json{};
  return out;
}

namespace detail {

inline std::vector<VertexSet> bags_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("bags: expected an array");
  std::vector<VertexSet> bags;
  for (const auto& bag : j) {
    if (!bag.is_array()) throw ParseError("bag: expected an array of ids");
    std::vector<Vertex> ids;
    for (const auto& id : bag) ids.push_back(id.get<Vertex>());
    const std::size_t raw = ids.size();
    bags.emplace_back(std::move(ids));
    if (bags.back().size() != raw) throw ParseError("bag: repeated vertex id");
  }
  return bags;
}

inline Graph tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw ParseError("tree: expected {nodes, edges}");
  const int n = j.at("nodes").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("tree: bad edge");
    edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& bad) {
    throw ParseError(std::string("tree: ") + bad.what());
  }
}

inline std::vector<VertexSet> indexed_bags_from_json(const nlohmann::json& j,
                                                     int nodes) {
  if (!j.is_object()) throw ParseError("bags: expected an object");
  std::vector<VertexSet> bags(nodes);
  std::vector<char> seen(nodes, 0);
  for (const auto& [key, value] : j.items()) {
    int x = -1;
    try {
      x = std::stoi(key);
    } catch (...) {
      throw ParseError("bags: bad node id '" + key + "'");
    }
    if (x < 0 || x >= nodes || seen[x])
      throw ParseError("bags: node id '" + key + "' out of range or repeated");
    seen[x] = 1;
    std::vector<Vertex> ids;
    for (const auto& id : value) ids.push_back(id.get<Vertex>());
    bags[x] = VertexSet(std::move(ids));
  }
  for (int x = 0; x < nodes; ++x)
    if (!seen[x])
      throw ParseError("bags: missing bag for node " + std::to_string(x));
  return bags;
}

}  // namespace detail

inline std::string artifact_kind(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("artifact: missing \"kind\"");
  return j.at("kind").get<std::string>();
}

inline PathDecomposition path_decomposition_from_json(const nlohmann::json& j) {
  if (artifact_kind(j) != "path-decomposition")
    throw ParseError("expected a path-decomposition artifact");
  return PathDecomposition{detail::bags_from_json(j.at("bags"))};
}

inline TreeDecomposition tree_decomposition_from_json(const nlohmann::json& j) {
  if (artifact_kind(j) != "tree-decomposition")
    throw ParseError("expected a tree-decomposition artifact");
  TreeDecomposition td;
  td.tree = detail::tree_from_json(j.at("tree"));
  td.bags = detail::indexed_bags_from_json(j.at("bags"), td.tree.vertex_count());
  return td;
}

inline TreePartition tree_partition_from_json(const nlohmann::json& j) {
  if (artifact_kind(j) != "tree-partition")
    throw ParseError("expected a tree-partition artifact");
  TreePartition tp;
  tp.tree = detail::tree_from_json(j.at("tree"));
  tp.bags = detail::indexed_bags_from_json(j.at("bags"), tp.tree.vertex_count());
  if (j.contains("witness") && !j.at("witness").is_null())
    tp.witness = path_decomposition_from_json(j.at("witness"));
  return tp;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& bad) {
    throw ParseError(path + ": " + bad.what());
  }
}

// ---------------------------------------------------------------------------
// Construction trace export, for audit tooling.
// ---------------------------------------------------------------------------

inline nlohmann::json trace_to_json(const ConstructionTrace& trace) {
  auto levels = nlohmann::json::array();
  for (const auto& lv : trace.levels) {
    nlohmann::json j = {{"depth", lv.depth},
                        {"parent", lv.parent},
                        {"k", lv.k},
                        {"d", lv.degree_bound},
                        {"base_case", lv.base_case},
                        {"graph", tree_to_json(lv.graph)},
                        {"to_parent", lv.to_parent},
                        {"seed", lv.seed.ids()},
                        {"pd", bags_to_json(lv.pd.bags)},
                        {"x", lv.x_nodes},
                        {"y", lv.y_nodes},
                        {"z", lv.z.ids()},
                        {"contracted_path", lv.contracted},
                        {"alpha", lv.alpha},
                        {"tree", tree_to_json(lv.result.tree)},
                        {"bags", indexed_bags_to_json(lv.result.bags)}};
    j["witness"] =
        lv.result.witness ? to_json(*lv.result.witness) : nlohmann::json{};
    auto edge_sets = nlohmann::json::array();
    for (std::size_t e = 0; e < lv.edge_vertices.size(); ++e)
      edge_sets.push_back({{"edge", {lv.contracted[e], lv.contracted[e + 1]}},
                           {"vertices", lv.edge_vertices[e].ids()},
                           {"boundary", lv.edge_boundary[e].ids()}});
    j["contracted_edges"] = edge_sets;
    auto subpaths = nlohmann::json::array();
    for (const auto& sp : lv.subpaths) {
      nlohmann::json s = {{"nodes", sp.nodes},
                          {"level_nodes", sp.level_nodes},
                          {"tree_nodes", sp.level_tree_nodes},
                          {"children", sp.child_levels}};
      auto level_edges = nlohmann::json::array();
      for (const auto& edges : sp.level_edges) {
        auto arr = nlohmann::json::array();
        for (const auto& [a, b] : edges)
          arr.push_back(nlohmann::json::array({a, b}));
        level_edges.push_back(arr);
      }
      s["level_edges"] = level_edges;
      auto boundaries = nlohmann::json::array();
      for (const auto& b : sp.level_boundary) boundaries.push_back(b.ids());
      s["level_boundary"] = boundaries;
      auto vertices = nlohmann::json::array();
      for (const auto& v : sp.level_vertices) vertices.push_back(v.ids());
      s["level_vertices"] = vertices;
      subpaths.push_back(s);
    }
    j["subpaths"] = subpaths;
    levels.push_back(j);
  }
  return {{"kind", "construction-trace"}, {"levels", levels}};
}

// ---------------------------------------------------------------------------
// DOT export.
// ---------------------------------------------------------------------------

inline void write_dot_graph(const Graph& g, std::ostream& out,
                            const std::string& name = "G") {
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

/// Tree-partition as a clustered drawing: one cluster per tree node holding
/// its bag, host edges drawn between vertices, tree edges dashed between bag
/// anchor nodes.
inline void write_dot_tree_partition(const Graph& g, const TreePartition& tp,
                                     std::ostream& out) {
  out << "graph treepartition {\n";
  out << "  node [shape=circle];\n";
  for (int x = 0; x < tp.tree.vertex_count(); ++x) {
    out << "  subgraph cluster_" << x << " {\n";
    out << "    label=\"bag " << x << "\";\n";
    out << "    anchor_" << x << " [shape=point, style=invis];\n";
    for (Vertex v : tp.bags[x]) out << "    " << v << ";\n";
    out << "  }\n";
  }
  for (const auto& [u, v] : g.edges())
    out << "  " << u << " -- " << v << ";\n";
  for (const auto& [a, b] : tp.tree.edges())
    out << "  anchor_" << a << " -- anchor_" << b
        << " [style=dashed, constraint=false];\n";
  out << "}\n";
}

}  // namespace treepart
