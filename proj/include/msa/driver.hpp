#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msa/approx.hpp"
#include "msa/fpt_q.hpp"
#include "msa/instance.hpp"

namespace msa {

enum class Algo { kDw, kOracle, kFptQ, kApproxMvc, kApproxMhs, kLevel2 };

std::string_view algo_name(Algo algo);
std::optional<Algo> parse_algo(std::string_view name);
const std::vector<Algo>& all_algos();

struct SolveOptions {
  std::uint64_t seed = 0;
  /// Penalty budget for fpt-q. Unset: try 0, 1, 2, ... up to max_q.
  std::optional<std::size_t> q;
  std::size_t max_q = 8;
  /// Trials per budget for fpt-q; 0 means ceil(4^q).
  std::size_t reps = 0;
  ResidualSolver residual = ResidualSolver::kDw;
  HsStrategy hs_strategy = HsStrategy::kBestOfBoth;
};

struct SolveOutcome {
  Instance instance;  // normalized
  Arborescence reduced;
  Arborescence tree;  // over the original characters
  /// fpt-q only: the budget that produced the tree.
  std::optional<std::size_t> q_used;
};

/// Normalizes, solves with the chosen algorithm, and lifts. Throws
/// Refused when the algorithm's guard rejects the instance.
SolveOutcome solve(const RawInstance& raw, Algo algo, const SolveOptions& options = {});

/// Solves the normalized instance directly.
Arborescence solve_normalized(const Instance& inst, Algo algo, const SolveOptions& options,
                              std::optional<std::size_t>* q_used = nullptr);

/// Oracle cost when the oracle admits the instance, dw cost otherwise.
std::size_t reference_cost(const Instance& inst);

}  // namespace msa
