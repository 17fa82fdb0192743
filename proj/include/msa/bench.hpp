#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "msa/driver.hpp"

namespace msa {

struct BenchConfig {
  std::uint64_t seed = 1;
  std::size_t random_instances = 100;
  std::size_t random_m = 6;
  std::size_t random_terminals = 5;
  std::size_t gadget_min = 3;
  std::size_t gadget_max = 6;
  /// Independent solve_randomized runs per instance for the success rate.
  std::size_t fpt_runs = 200;
  bool parallel = true;
};

struct BenchRow {
  std::string family;
  std::string algorithm;
  std::size_t instances = 0;
  /// Instances the algorithm did not refuse.
  std::size_t solved = 0;
  double mean_cost = 0;
  double mean_ratio = 0;
  double max_ratio = 0;
  /// fpt-q: share of runs at q_budget = q_opt reaching the reference cost,
  /// and the mean of 4^-q_opt over the same instances. Negative elsewhere.
  double success_rate = -1;
  double success_floor = -1;
  double mean_ms = 0;
};

/// Families: random instances at the configured shape, and the K_n
/// gadgets for n in [gadget_min, gadget_max]. Reference costs come from
/// the oracle where it applies and from dw otherwise. Cells are solved in
/// parallel; everything except wall times is deterministic for a seed.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace msa
