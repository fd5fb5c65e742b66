// Command-line surface: generators, exact pathwidth, the tree-partition
// construction, artifact verification, brute-force oracles and bound sweeps.
// Exit codes: 0 success/valid, 1 violations or semantic errors, 2 I/O,
// parse or usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treepart/generators.hpp"
#include "treepart/io.hpp"
#include "treepart/oracles.hpp"
#include "treepart/pathwidth.hpp"
#include "treepart/tree_partition.hpp"

namespace {

using namespace treepart;

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << contents;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  write_file(path, j.dump(2) + "\n");
}

std::string graph_text(const Graph& g) {
  std::ostringstream out;
  write_graph_text(g, out);
  return out.str();
}

VertexSet parse_seed_list(const std::string& spec) {
  std::vector<Vertex> ids;
  std::string item;
  std::istringstream in(spec);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      ids.push_back(std::stoi(item));
    } catch (...) {
      throw ParseError("bad seed list entry '" + item + "'");
    }
  }
  return VertexSet(std::move(ids));
}

struct Range {
  int lo = 0, hi = 0, step = 1;
};

Range parse_range(const std::string& spec) {
  Range r;
  const auto first = spec.find(':');
  try {
    if (first == std::string::npos) {
      r.lo = r.hi = std::stoi(spec);
      return r;
    }
    r.lo = std::stoi(spec.substr(0, first));
    const auto second = spec.find(':', first + 1);
    if (second == std::string::npos) {
      r.hi = std::stoi(spec.substr(first + 1));
    } else {
      r.hi = std::stoi(spec.substr(first + 1, second - first - 1));
      r.step = std::stoi(spec.substr(second + 1));
    }
  } catch (...) {
    throw ParseError("bad range '" + spec + "', expected a[:b[:step]]");
  }
  if (r.step < 1 || r.hi < r.lo)
    throw ParseError("bad range '" + spec + "'");
  return r;
}

void print_decomposition_report(const DecompositionReport& report) {
  for (const auto& s : report.structural) std::cout << "structural: " << s << "\n";
  for (const auto& [u, v] : report.uncovered_edges)
    std::cout << "uncovered edge: (" << u << "," << v << ")\n";
  for (Vertex v : report.missing_vertices)
    std::cout << "vertex in no bag: " << v << "\n";
  for (Vertex v : report.broken_vertices)
    std::cout << "vertex bag set not contiguous/connected: " << v << "\n";
}

void print_partition_report(const PartitionReport& report) {
  for (const auto& s : report.structural) std::cout << "structural: " << s << "\n";
  for (Vertex v : report.missing_vertices)
    std::cout << "vertex in no bag: " << v << "\n";
  for (Vertex v : report.duplicated_vertices)
    std::cout << "vertex in several bags: " << v << "\n";
  for (const auto& [u, v] : report.nonadjacent_edges)
    std::cout << "edge between non-adjacent bags: (" << u << "," << v << ")\n";
}

nlohmann::json manifest_skeleton(const std::string& subcommand) {
  return {{"kind", "run-manifest"},
          {"tool", "treepart"},
          {"version", kToolVersion},
          {"subcommand", subcommand},
          {"inputs", nlohmann::json::object()},
          {"parameters", nlohmann::json::object()},
          {"outputs", nlohmann::json::object()}};
}

int run_gen(const std::string& family, int n, int depth, std::uint64_t seed,
            const std::string& out_base, const std::string& dot_path) {
  auto manifest = manifest_skeleton("gen");
  manifest["parameters"] = {{"family", family}, {"n", n}};
  const std::string graph_path = out_base + ".gr";
  Graph graph;
  if (family == "fan") {
    auto fan = gen_fan(n);
    graph = fan.graph;
    write_json(out_base + ".pd.json", to_json(fan.pd));
    write_json(out_base + ".tp.json", to_json(fan.partition));
    manifest["outputs"]["pd"] = out_base + ".pd.json";
    manifest["outputs"]["tp"] = out_base + ".tp.json";
  } else if (family == "comb") {
    auto comb = gen_comb(n);
    graph = comb.graph;
    write_json(out_base + ".pd.json", to_json(comb.pd));
    manifest["outputs"]["pd"] = out_base + ".pd.json";
  } else if (family == "gi") {
    auto inst = gen_lower_bound_tree(depth, n);
    graph = inst.graph;
    manifest["parameters"]["i"] = depth;
    write_json(out_base + ".pd.json", to_json(inst.pd));
    manifest["outputs"]["pd"] = out_base + ".pd.json";
  } else if (family == "path") {
    graph = gen_path(n);
  } else if (family == "random-tree") {
    graph = gen_random_tree(n, seed);
    manifest["parameters"]["seed"] = seed;
  } else {
    throw ParseError("unknown family '" + family + "'");
  }
  write_file(graph_path, graph_text(graph));
  manifest["outputs"]["graph"] = graph_path;
  if (!dot_path.empty()) {
    std::ostringstream dot;
    write_dot_graph(graph, dot);
    write_file(dot_path, dot.str());
    manifest["outputs"]["dot"] = dot_path;
  }
  write_json(out_base + ".manifest.json", manifest);
  std::cout << "wrote " << graph_path << " (" << graph.vertex_count()
            << " vertices, " << graph.edge_count() << " edges)\n";
  return 0;
}

int run_pw(const std::string& graph_path, int limit,
           const std::string& out_path) {
  const Graph g = read_graph_file(graph_path);
  const auto result = exact_pathwidth(g, limit);
  std::cout << "pathwidth " << result.value << "\n";
  if (!out_path.empty()) write_json(out_path, to_json(result.witness));
  return 0;
}

int run_partition(const std::string& graph_path, const std::string& pd_path,
                  const std::string& seed_spec, long long degree_bound,
                  const std::string& out_base, const std::string& dot_path,
                  bool audit) {
  const Graph g = read_graph_file(graph_path);
  const auto pd = path_decomposition_from_json(load_json_file(pd_path));
  const auto report = validate_path_decomposition(g, pd);
  if (!report.valid()) {
    std::cout << "input decomposition is not valid:\n";
    print_decomposition_report(report);
    return 1;
  }
  const VertexSet seed = parse_seed_list(seed_spec);
  if (degree_bound < 0) degree_bound = std::max(1, max_degree(g));

  const auto built = build_tree_partition(g, pd, seed, degree_bound);
  if (audit) {
    const auto problems = audit_construction(built);
    if (!problems.empty()) {
      for (const auto& p : problems) std::cout << "audit: " << p << "\n";
      return 1;
    }
  }

  const int k = pd_width(pd);
  const long long bound = f_bound(std::max(k, 0), degree_bound,
                                  static_cast<long long>(seed.size()));
  write_json(out_base + ".tp.json", to_json(built.partition));
  write_json(out_base + ".witness.json", to_json(*built.partition.witness));
  write_json(out_base + ".trace.json", trace_to_json(built.trace));
  // The witness is a decomposition of the indexing tree; writing the tree as
  // a graph file lets `verify` re-check the witness on its own.
  write_file(out_base + ".tree.gr", graph_text(built.partition.tree));
  auto manifest = manifest_skeleton("partition");
  manifest["inputs"] = {{"graph", graph_path}, {"pd", pd_path}};
  manifest["parameters"] = {{"k", k},
                            {"d", degree_bound},
                            {"s", seed.ids()}};
  manifest["outputs"] = {{"tp", out_base + ".tp.json"},
                         {"witness", out_base + ".witness.json"},
                         {"trace", out_base + ".trace.json"},
                         {"tree", out_base + ".tree.gr"}};
  if (!dot_path.empty()) {
    std::ostringstream dot;
    write_dot_tree_partition(g, built.partition, dot);
    write_file(dot_path, dot.str());
    manifest["outputs"]["dot"] = dot_path;
  }
  write_json(out_base + ".manifest.json", manifest);
  std::cout << "k=" << k << " d=" << degree_bound << " s=" << seed.size()
            << " width=" << tp_width(built.partition) << " f_bound=" << bound
            << " witness_pw=" << pd_width(*built.partition.witness)
            << " pw_bound=" << 2 * k + 1 << "\n";
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& artifact_path) {
  const Graph g = read_graph_file(graph_path);
  const auto artifact = load_json_file(artifact_path);
  const std::string kind = artifact_kind(artifact);
  if (kind == "path-decomposition") {
    const auto pd = path_decomposition_from_json(artifact);
    const auto report = validate_path_decomposition(g, pd);
    if (!report.valid()) {
      print_decomposition_report(report);
      return 1;
    }
    std::cout << "OK path-decomposition width " << pd_width(pd) << "\n";
    return 0;
  }
  if (kind == "tree-decomposition") {
    const auto td = tree_decomposition_from_json(artifact);
    const auto report = validate_tree_decomposition(g, td);
    if (!report.valid()) {
      print_decomposition_report(report);
      return 1;
    }
    std::cout << "OK tree-decomposition width " << td_width(td) << "\n";
    return 0;
  }
  if (kind == "tree-partition") {
    const auto tp = tree_partition_from_json(artifact);
    const auto report = validate_tree_partition(g, tp);
    bool ok = report.valid();
    if (!ok) print_partition_report(report);
    if (tp.witness) {
      const auto wreport = validate_path_decomposition(tp.tree, *tp.witness);
      if (!wreport.valid()) {
        std::cout << "witness decomposition of the tree is not valid:\n";
        print_decomposition_report(wreport);
        ok = false;
      }
    }
    if (!ok) return 1;
    std::cout << "OK tree-partition width " << tp_width(tp);
    if (tp.witness) std::cout << " witness_pw " << pd_width(*tp.witness);
    std::cout << "\n";
    return 0;
  }
  throw ParseError("unknown artifact kind '" + kind + "'");
}

int run_oracle(const std::string& kind, const std::string& graph_path,
               int limit) {
  const Graph g = read_graph_file(graph_path);
  int value = 0;
  if (kind == "pw")
    value = brute_pathwidth(g, limit > 0 ? limit : 9);
  else if (kind == "ppw")
    value = brute_path_partition_width(g, limit > 0 ? limit : 16);
  else if (kind == "tpw")
    value = brute_tree_partition_width(g, limit > 0 ? limit : 8);
  else
    throw ParseError("unknown oracle '" + kind + "' (pw, ppw, tpw)");
  std::cout << value << "\n";
  return 0;
}

int run_sweep(const std::string& family, const std::string& n_spec, int depth,
              long long degree_bound, const std::string& out_path,
              std::string manifest_path) {
  const Range range = parse_range(n_spec);
  std::ostringstream csv;
  csv << "instance,k,d,s,width,f_bound,witness_pw,pw_bound\n";
  for (int n = range.lo; n <= range.hi; n += range.step) {
    Graph graph;
    PathDecomposition pd;
    std::string label;
    if (family == "comb") {
      auto inst = gen_comb(n);
      graph = std::move(inst.graph);
      pd = std::move(inst.pd);
      label = "comb-" + std::to_string(n);
    } else if (family == "fan") {
      auto inst = gen_fan(n);
      graph = std::move(inst.graph);
      pd = std::move(inst.pd);
      label = "fan-" + std::to_string(n);
    } else if (family == "gi") {
      auto inst = gen_lower_bound_tree(depth, n);
      graph = std::move(inst.graph);
      pd = std::move(inst.pd);
      label = "g" + std::to_string(depth) + "-" + std::to_string(n);
    } else {
      throw ParseError("unknown sweep family '" + family + "'");
    }
    const long long d =
        degree_bound < 0 ? std::max(1, max_degree(graph)) : degree_bound;
    const auto built = build_tree_partition(graph, pd, {}, d);
    const int k = pd_width(pd);
    csv << label << "," << k << "," << d << ",0,"
        << tp_width(built.partition) << "," << f_bound(std::max(k, 0), d, 0)
        << "," << pd_width(*built.partition.witness) << "," << 2 * k + 1
        << "\n";
  }
  write_file(out_path, csv.str());
  if (manifest_path.empty()) manifest_path = out_path + ".manifest.json";
  auto manifest = manifest_skeleton("sweep");
  manifest["parameters"] = {{"family", family},
                            {"n", n_spec},
                            {"i", depth},
                            {"d", degree_bound}};
  manifest["outputs"] = {{"csv", out_path}};
  write_json(manifest_path, manifest);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-partition toolkit"};
  app.require_subcommand(1);

  // gen
  std::string gen_family, gen_out = "out", gen_dot;
  int gen_n = 4, gen_i = 2;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a named family instance");
  gen->add_option("family", gen_family,
                  "fan | comb | gi | path | random-tree")
      ->required();
  gen->add_option("--n", gen_n, "size parameter");
  gen->add_option("--i", gen_i, "nesting depth for gi");
  gen->add_option("--seed", gen_seed, "seed for random-tree");
  gen->add_option("--out", gen_out, "output base path");
  gen->add_option("--dot", gen_dot, "also write a DOT drawing here");

  // pw
  std::string pw_graph, pw_out;
  int pw_limit = 20;
  auto* pw = app.add_subcommand("pw", "exact pathwidth of a small graph");
  pw->add_option("graph", pw_graph, "graph file")->required();
  pw->add_option("--limit", pw_limit, "exact-search vertex limit");
  pw->add_option("--out", pw_out, "write the witness decomposition here");

  // partition
  std::string part_graph, part_pd, part_seed, part_out = "out", part_dot;
  long long part_d = -1;
  bool part_audit = false;
  auto* part = app.add_subcommand(
      "partition", "build a tree-partition from a path-decomposition");
  part->add_option("graph", part_graph, "graph file")->required();
  part->add_option("--pd", part_pd, "path-decomposition JSON")->required();
  part->add_option("--s", part_seed, "comma-separated seed vertex ids");
  part->add_option("--d", part_d, "degree bound (default: max degree)");
  part->add_option("--out", part_out, "output base path");
  part->add_option("--dot", part_dot, "also write a clustered DOT drawing");
  part->add_flag("--audit", part_audit, "re-check every construction bound");

  // verify
  std::string ver_graph, ver_artifact;
  auto* ver = app.add_subcommand("verify", "validate an artifact file");
  ver->add_option("graph", ver_graph, "graph file")->required();
  ver->add_option("artifact", ver_artifact, "artifact JSON")->required();

  // oracle
  std::string ora_kind, ora_graph;
  int ora_limit = 0;
  auto* ora = app.add_subcommand("oracle", "brute-force ground truth");
  ora->add_option("kind", ora_kind, "pw | ppw | tpw")->required();
  ora->add_option("graph", ora_graph, "graph file")->required();
  ora->add_option("--limit", ora_limit, "override the size limit");

  // sweep
  std::string sw_family, sw_n = "2:6", sw_out = "sweep.csv", sw_manifest;
  int sw_i = 2;
  long long sw_d = -1;
  auto* sw = app.add_subcommand("sweep", "measured width vs bound table");
  sw->add_option("--family", sw_family, "comb | fan | gi")->required();
  sw->add_option("--n", sw_n, "size range a[:b[:step]]");
  sw->add_option("--i", sw_i, "nesting depth for gi");
  sw->add_option("--d", sw_d, "degree bound (default: max degree)");
  sw->add_option("--out", sw_out, "CSV output path");
  sw->add_option("--manifest", sw_manifest, "manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return run_gen(gen_family, gen_n, gen_i, gen_seed, gen_out, gen_dot);
    if (pw->parsed()) return run_pw(pw_graph, pw_limit, pw_out);
    if (part->parsed())
      return run_partition(part_graph, part_pd, part_seed, part_d, part_out,
                           part_dot, part_audit);
    if (ver->parsed()) return run_verify(ver_graph, ver_artifact);
    if (ora->parsed()) return run_oracle(ora_kind, ora_graph, ora_limit);
    if (sw->parsed())
      return run_sweep(sw_family, sw_n, sw_i, sw_d, sw_out, sw_manifest);
  } catch (const treepart::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
