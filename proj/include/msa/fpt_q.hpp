#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msa/conflict.hpp"
#include "msa/instance.hpp"
#include "msa/supersets.hpp"

namespace msa {

enum class ResidualSolver { kDw, kOracle };

struct RunConfig {
  /// Penalty budget q.
  std::size_t q_budget = 0;
  std::uint64_t seed = 0;
  /// Trials for solve_derandomized; 0 means ceil(4^q_budget).
  std::size_t repetitions = 0;
  ResidualSolver residual = ResidualSolver::kDw;
};

/// A superset with the conflict graph of its members.
struct WorkItem {
  Superset superset;
  ConflictGraph local_cg;
};

WorkItem make_work_item(Superset ss);

struct PeelResult {
  std::vector<Edge> edges;
  std::vector<WorkItem> leaves;
  std::size_t splits = 0;
};

/// Splits a superset on non-conflicting characters until none is left to
/// split. Each superset is first moved down to the LCA of its members.
/// The edge of a split on c enters the LCA L of the (c, 1) side from
/// L with c cleared, and that node joins the (c, 0) side as an extra
/// member; the paths it implies are recorded with the split edges.
PeelResult peel(const Superset& ss);

struct RunStats {
  std::size_t loop_iterations = 0;
  std::size_t peel_splits = 0;
  std::size_t random_splits = 0;
  /// Leaves that still had a conflicting character when the loop stopped.
  std::size_t residual_supersets = 0;
  std::size_t max_residual_conflicts = 0;
  std::size_t max_residual_members = 0;
};

/// One randomized run. Not guaranteed optimal; throws Refused when the
/// run needs more than q_budget random choices or a residual superset is
/// too large for the residual solver.
Arborescence solve_randomized(const Instance& inst, const RunConfig& cfg,
                              RunStats* stats = nullptr);

/// Seed of trial t derived from the base seed (splitmix64 of both).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// ceil(4^q), saturating.
std::size_t default_repetitions(std::size_t q_budget);

struct DerandStats {
  std::size_t trials = 0;
  std::size_t refused = 0;
  std::size_t best_trial = 0;
};

/// Repeats solve_randomized with derived seeds (trials run in parallel)
/// and keeps the cheapest tree; ties go to the lowest trial index.
Arborescence solve_derandomized(const Instance& inst, const RunConfig& cfg,
                                DerandStats* stats = nullptr);

}  // namespace msa
