#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "msa/conflict.hpp"
#include "msa/instance.hpp"

namespace msa {

/// Optimal cost per subset of the non-root terminals ("keys").
///
/// cost[S] is the cheapest arborescence rooted at lca(S) spanning S.
/// For |S| >= 2 it satisfies
///   cost[S] = min_X cost[X] + cost[S\X] + d(lca S, lca X) + d(lca S, lca S\X)
/// over nontrivial X containing the lowest key of S; split[S] stores the
/// numerically smallest minimizing X (0 for singletons).
struct SubsetTable {
  std::size_t keys = 0;
  std::vector<std::uint32_t> cost;
  std::vector<std::uint32_t> split;
  std::vector<std::uint32_t> lca_level;
  /// Candidate splits examined while filling the table.
  std::uint64_t split_work = 0;
};

/// Hard limit on keys regardless of options (table memory).
inline constexpr std::size_t kMaxSubsetKeys = 26;

/// Size-layered fill with the subsets of each size processed in parallel.
SubsetTable fill_subset_table(std::span<const Node> keys);
/// Reference fill in ascending mask order on one thread.
SubsetTable fill_subset_table_serial(std::span<const Node> keys);

struct DwOptions {
  /// Refuse instances with more terminals than this (root included).
  std::size_t max_terminals = 20;
  bool parallel = true;
};

struct DwStats {
  std::uint64_t split_work = 0;
  std::size_t keys = 0;
};

/// Exact solver over terminal subsets with LCA-to-LCA connections.
Arborescence solve_dw(const Instance& inst, const DwOptions& options = {},
                      DwStats* stats = nullptr);

struct OracleLimits {
  std::size_t max_m = 12;
  /// Root included.
  std::size_t max_terminals = 9;
};

bool oracle_admits(const Instance& inst, const OracleLimits& limits = {});

/// Exhaustive directed Steiner DP over every (hypercube node, terminal
/// subset) state. Independent of the LCA recursion; used as ground truth.
Arborescence oracle_solve(const Instance& inst, const OracleLimits& limits = {});

/// Exact minimum vertex cover by bounded branching; forced vertices are
/// always included.
VertexCover min_vertex_cover(const ConflictGraph& graph,
                             std::span<const std::size_t> forced = {});

/// Graph on characters with an edge (u, v) per level-2 terminal with u, v set.
ConflictGraph level2_graph(const Instance& inst);

/// Exact solver for terminals of level at most 2: level-1 nodes form a
/// minimum vertex cover of level2_graph containing every level-1 terminal.
Arborescence solve_level2(const Instance& inst);

}  // namespace msa
