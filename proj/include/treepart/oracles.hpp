#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "treepart/graph.hpp"

namespace treepart {

// Brute-force ground truth for tiny instances. Everything here works straight
// from the definitions and never calls the modules it is meant to validate.

namespace detail {

struct MaskGraph {
  int n = 0;
  std::uint32_t full = 0;
  std::vector<std::uint32_t> adj;

  explicit MaskGraph(const Graph& g)
      : n(g.vertex_count()),
        full(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1),
        adj(n, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj[u] |= std::uint32_t{1} << v;
      adj[v] |= std::uint32_t{1} << u;
    }
  }

  int boundary(std::uint32_t placed) const {
    int count = 0;
    for (std::uint32_t rest = placed; rest != 0;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & ~placed & full) ++count;
    }
    return count;
  }
};

inline void pathwidth_dfs(const MaskGraph& mg, std::uint32_t placed,
                          int running_max, int& best) {
  if (running_max >= best) return;
  if (placed == mg.full) {
    best = running_max;
    return;
  }
  for (int v = 0; v < mg.n; ++v) {
    const std::uint32_t bit = std::uint32_t{1} << v;
    if (placed & bit) continue;
    const std::uint32_t next = placed | bit;
    pathwidth_dfs(mg, next, std::max(running_max, mg.boundary(next)), best);
  }
}

}  // namespace detail

/// Minimum over all vertex orderings of the largest number of placed vertices
/// that still have an unplaced neighbour. Equals the pathwidth.
inline int brute_pathwidth(const Graph& g, int limit = 9) {
  const int n = g.vertex_count();
  if (n > limit)
    throw SizeLimitError("brute_pathwidth: " + std::to_string(n) +
                             " vertices exceeds the limit of " +
                             std::to_string(limit),
                         limit);
  if (n == 0) return -1;
  detail::MaskGraph mg(g);
  int best = n;  // any ordering has boundary below n
  detail::pathwidth_dfs(mg, 0, 0, best);
  return best;
}

/// Minimum width of an ordered partition into consecutive bags such that
/// every edge stays inside a bag or crosses between consecutive bags.
/// Iterative deepening on the width, searching over frontier states
/// (placed set, last bag) with memoized dead ends.
inline int brute_path_partition_width(const Graph& g, int limit = 16) {
  const int n = g.vertex_count();
  if (n > limit)
    throw SizeLimitError("brute_path_partition_width: " + std::to_string(n) +
                             " vertices exceeds the limit of " +
                             std::to_string(limit),
                         limit);
  if (n == 0) return 0;
  detail::MaskGraph mg(g);

  std::unordered_set<std::uint64_t> dead;
  auto key = [](std::uint32_t placed, std::uint32_t last) {
    return (std::uint64_t{placed} << 32) | last;
  };

  // Feasibility of one more bag from state (placed, last): the bag must
  // swallow every neighbour of the placed set, and none of its members may
  // touch placed vertices outside the previous bag.
  auto search = [&](auto&& self, std::uint32_t placed, std::uint32_t last,
                    int width) -> bool {
    if (placed == mg.full) return true;
    if (dead.contains(key(placed, last))) return false;

    std::uint32_t forced = 0;
    for (std::uint32_t rest = placed; rest != 0;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      forced |= mg.adj[v];
    }
    forced &= ~placed & mg.full;

    std::uint32_t allowed = 0;
    const std::uint32_t blocked_against = placed & ~last;
    for (int v = 0; v < mg.n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (placed & bit) continue;
      if (mg.adj[v] & blocked_against) continue;
      allowed |= bit;
    }

    bool ok = false;
    if ((forced & ~allowed) == 0 && std::popcount(forced) <= width) {
      const std::uint32_t optional = allowed & ~forced;
      const int room = width - std::popcount(forced);
      // All size-capped submasks of `optional`. Empty bags are skipped: a
      // minimum-width partition never needs one, and every step must place
      // at least one vertex for the search to terminate.
      std::uint32_t extra = optional;
      while (true) {
        if (std::popcount(extra) <= room) {
          const std::uint32_t bag = forced | extra;
          if (bag != 0 && self(self, placed | bag, bag, width)) {
            ok = true;
            break;
          }
        }
        if (extra == 0) break;
        extra = (extra - 1) & optional;
      }
    }
    if (!ok) dead.insert(key(placed, last));
    return ok;
  };

  for (int width = 1; width <= n; ++width) {
    dead.clear();
    if (search(search, 0, 0, width)) return width;
  }
  return n;  // unreachable: width n always works
}

/// Minimum width over all set-partitions of V whose quotient graph (bags
/// adjacent iff an edge crosses) is acyclic. Exhaustive enumeration via
/// restricted-growth strings.
inline int brute_tree_partition_width(const Graph& g, int limit = 8) {
  const int n = g.vertex_count();
  if (n > limit)
    throw SizeLimitError("brute_tree_partition_width: " + std::to_string(n) +
                             " vertices exceeds the limit of " +
                             std::to_string(limit),
                         limit);
  if (n == 0) return 0;

  std::vector<int> block(n, -1), size(n, 0), parent(n);
  int best = n;  // one block holding everything is always acyclic

  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  // Acyclicity of the simple quotient graph of a complete assignment.
  auto acyclic = [&] {
    std::uint64_t seen = 0;
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [u, v] : g.edges()) {
      int a = block[u], b = block[v];
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      const std::uint64_t pair_bit = std::uint64_t{1} << (a * 8 + b);
      if (seen & pair_bit) continue;
      seen |= pair_bit;
      const int ra = find(a), rb = find(b);
      if (ra == rb) return false;
      parent[ra] = rb;
    }
    return true;
  };

  // Restricted-growth enumeration with block sizes maintained incrementally;
  // subtrees that cannot beat the best width are pruned.
  auto enumerate = [&](auto&& self, int v, int used, int width) -> void {
    if (width >= best) return;
    if (v == n) {
      if (acyclic()) best = width;
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      block[v] = b;
      ++size[b];
      self(self, v + 1, std::max(used, b + 1), std::max(width, size[b]));
      --size[b];
    }
  };
  enumerate(enumerate, 0, 0, 0);
  return best;
}

}  // namespace treepart
