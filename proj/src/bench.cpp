#include "msa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>

#include "msa/error.hpp"
#include "msa/fpt_q.hpp"
#include "msa/generators.hpp"

namespace msa {

namespace {

struct Family {
  std::string name;
  std::vector<RawInstance> instances;
};

struct Cell {
  bool refused = true;
  std::size_t cost = 0;
  double ratio = 0;
  double ms = 0;
  double success = -1;
  double floor = -1;
};

std::vector<Family> families(const BenchConfig& config) {
  std::vector<Family> out;
  Family random{"random-m" + std::to_string(config.random_m) + "-r" +
                    std::to_string(config.random_terminals),
                {}};
  for (std::size_t i = 0; i < config.random_instances; ++i) {
    random.instances.push_back(gen_random(config.random_m, config.random_terminals, config.random_m,
                                          trial_seed(config.seed, i)));
  }
  out.push_back(std::move(random));
  for (std::size_t n = config.gadget_min; n <= config.gadget_max; ++n) {
    out.push_back(Family{"K" + std::to_string(n), {gen_from_graph(complete_graph(n))}});
  }
  return out;
}

Cell run_cell(const Instance& inst, std::size_t reference, Algo algo, std::uint64_t seed,
              const BenchConfig& config) {
  Cell cell;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t q_opt = reference - inst.m();
  try {
    if (algo == Algo::kFptQ) {
      // Success rate of single runs at the optimal budget.
      RunConfig cfg;
      cfg.q_budget = q_opt;
      std::size_t hits = 0, solved = 0, total = 0;
      for (std::size_t r = 0; r < config.fpt_runs; ++r) {
        cfg.seed = trial_seed(seed, r);
        try {
          std::size_t c = solve_randomized(inst, cfg).cost();
          ++solved;
          total += c;
          if (c == reference) ++hits;
        } catch (const Refused&) {
        }
      }
      cell.success = config.fpt_runs ? static_cast<double>(hits) / config.fpt_runs : 0.0;
      cell.floor = std::pow(4.0, -static_cast<double>(q_opt));
      if (solved > 0) {
        cell.refused = false;
        cell.cost = (total + solved / 2) / solved;
      }
    } else {
      SolveOptions options;
      options.seed = seed;
      cell.cost = solve_normalized(inst, algo, options).cost();
      cell.refused = false;
    }
  } catch (const Refused&) {
  }
  cell.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!cell.refused && reference > 0) cell.ratio = static_cast<double>(cell.cost) / reference;
  if (!cell.refused && reference == 0) cell.ratio = 1.0;
  return cell;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  const auto& algos = all_algos();
  for (const auto& family : families(config)) {
    const std::size_t n = family.instances.size();
    std::vector<std::optional<Instance>> insts(n);
    std::vector<std::size_t> refs(n, 0);
    std::vector<Cell> cells(n * algos.size());

#pragma omp parallel for schedule(dynamic, 1) if (config.parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      insts[i] = normalize(family.instances[i]);
      refs[i] = reference_cost(*insts[i]);
    }
#pragma omp parallel for schedule(dynamic, 1) if (config.parallel)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(cells.size()); ++k) {
      const std::size_t i = k / algos.size();
      const Algo algo = algos[k % algos.size()];
      cells[k] = run_cell(*insts[i], refs[i], algo, trial_seed(config.seed ^ 0xb5ad4eceda1ce2a9ULL, i),
                          config);
    }

    for (std::size_t a = 0; a < algos.size(); ++a) {
      BenchRow row;
      row.family = family.name;
      row.algorithm = std::string(algo_name(algos[a]));
      row.instances = n;
      double success = 0, floor = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Cell& cell = cells[i * algos.size() + a];
        row.mean_ms += cell.ms;
        if (cell.success >= 0) success += cell.success, floor += cell.floor;
        if (cell.refused) continue;
        ++row.solved;
        row.mean_cost += cell.cost;
        row.mean_ratio += cell.ratio;
        row.max_ratio = std::max(row.max_ratio, cell.ratio);
      }
      if (row.solved) row.mean_cost /= row.solved, row.mean_ratio /= row.solved;
      if (n) row.mean_ms /= n;
      if (algos[a] == Algo::kFptQ && n) row.success_rate = success / n, row.success_floor = floor / n;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "family,algorithm,instances,solved,mean_cost,mean_ratio,max_ratio,success_rate,success_floor,mean_ms\n";
  for (const auto& r : rows) {
    out += r.family + "," + r.algorithm + "," + std::to_string(r.instances) + "," +
           std::to_string(r.solved) + "," + fixed(r.mean_cost, 3) + "," + fixed(r.mean_ratio, 4) + "," +
           fixed(r.max_ratio, 4) + "," + (r.success_rate < 0 ? "" : fixed(r.success_rate, 4)) + "," +
           (r.success_floor < 0 ? "" : fixed(r.success_floor, 4)) + "," + fixed(r.mean_ms, 3) + "\n";
  }
  return out;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-11s %5s %6s %9s %8s %8s %8s %8s %10s\n", "family",
                "algorithm", "inst", "solved", "cost", "ratio", "max", "success", "floor", "ms");
  std::string out = line;
  for (const auto& r : rows) {
    std::string success = r.success_rate < 0 ? "-" : fixed(r.success_rate, 3);
    std::string floor = r.success_floor < 0 ? "-" : fixed(r.success_floor, 3);
    std::snprintf(line, sizeof line, "%-14s %-11s %5zu %6zu %9.2f %8.3f %8.3f %8s %8s %10.2f\n",
                  r.family.c_str(), r.algorithm.c_str(), r.instances, r.solved, r.mean_cost,
                  r.mean_ratio, r.max_ratio, success.c_str(), floor.c_str(), r.mean_ms);
    out += line;
  }
  return out;
}

}  // namespace msa
