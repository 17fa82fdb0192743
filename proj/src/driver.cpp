#include "msa/driver.hpp"

#include <array>
#include <utility>

#include "msa/error.hpp"
#include "msa/exact.hpp"

namespace msa {

namespace {

constexpr std::array<std::pair<Algo, std::string_view>, 6> kNames{{
    {Algo::kDw, "dw"},
    {Algo::kOracle, "oracle"},
    {Algo::kFptQ, "fpt-q"},
    {Algo::kApproxMvc, "approx-mvc"},
    {Algo::kApproxMhs, "approx-mhs"},
    {Algo::kLevel2, "level2"},
}};

Arborescence solve_fpt(const Instance& inst, const SolveOptions& options,
                       std::optional<std::size_t>* q_used) {
  RunConfig cfg;
  cfg.seed = options.seed;
  cfg.repetitions = options.reps;
  cfg.residual = options.residual;
  if (options.q) {
    cfg.q_budget = *options.q;
    if (q_used) *q_used = cfg.q_budget;
    return solve_derandomized(inst, cfg);
  }
  for (std::size_t q = 0;; ++q) {
    cfg.q_budget = q;
    try {
      auto tree = solve_derandomized(inst, cfg);
      if (q_used) *q_used = q;
      return tree;
    } catch (const Refused&) {
      if (q >= options.max_q) throw;
    }
  }
}

}  // namespace

std::string_view algo_name(Algo algo) {
  for (auto [a, name] : kNames) {
    if (a == algo) return name;
  }
  return "?";
}

std::optional<Algo> parse_algo(std::string_view name) {
  for (auto [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

const std::vector<Algo>& all_algos() {
  static const std::vector<Algo> algos = [] {
    std::vector<Algo> out;
    for (auto [a, name] : kNames) out.push_back(a);
    return out;
  }();
  return algos;
}

Arborescence solve_normalized(const Instance& inst, Algo algo, const SolveOptions& options,
                              std::optional<std::size_t>* q_used) {
  if (inst.trivial()) return Arborescence(inst.root());
  switch (algo) {
    case Algo::kDw:
      return solve_dw(inst);
    case Algo::kOracle:
      if (!oracle_admits(inst)) {
        throw Refused("oracle handles m <= 12 and at most 9 terminals; got m = " +
                      std::to_string(inst.m()) + " with " +
                      std::to_string(inst.terminals().size()) + " terminals");
      }
      return oracle_solve(inst);
    case Algo::kFptQ:
      return solve_fpt(inst, options, q_used);
    case Algo::kApproxMvc:
      return solve_mvc(inst);
    case Algo::kApproxMhs:
      return solve_mhs(inst, MhsOptions{options.hs_strategy, true});
    case Algo::kLevel2:
      if (inst.max_level() > 2) {
        throw Refused("level2 needs terminals of level at most 2 after normalization; found level " +
                      std::to_string(inst.max_level()));
      }
      return solve_level2(inst);
  }
  throw std::logic_error("unknown algorithm");
}

SolveOutcome solve(const RawInstance& raw, Algo algo, const SolveOptions& options) {
  Instance inst = normalize(raw);
  std::optional<std::size_t> q_used;
  Arborescence reduced = solve_normalized(inst, algo, options, &q_used);
  Arborescence tree = lift(reduced, inst.record());
  return SolveOutcome{std::move(inst), std::move(reduced), std::move(tree), q_used};
}

std::size_t reference_cost(const Instance& inst) {
  if (inst.trivial()) return 0;
  return oracle_admits(inst) ? oracle_solve(inst).cost() : solve_dw(inst).cost();
}

}  // namespace msa
