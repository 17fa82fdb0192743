#include "msa/fpt_q.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "msa/error.hpp"
#include "msa/exact.hpp"

namespace msa {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// First character that varies among the members and conflicts with none.
std::optional<std::size_t> peelable(const WorkItem& item) {
  const auto& members = item.superset.members;
  const Node low = lca(members);
  Node high(low.dim());
  for (const auto& t : members) high |= t;
  for (auto c : minus(high, low).ones()) {
    if (item.local_cg.neighbors(c).empty()) return c;
  }
  return std::nullopt;
}

// Moves the supernode down to the LCA of the members, recording the path.
// Every member lies below the LCA, so some optimal subtree passes through it.
Superset tighten(Superset ss, std::vector<Edge>& edges) {
  const Node low = lca(ss.members);
  if (low == ss.supernode) return ss;
  Path path = ose(ss.supernode, low);
  for (std::size_t i = 1; i < path.size(); ++i) edges.push_back(Edge{path[i - 1], path[i]});
  auto pairs = ss.assignment.pairs();
  for (auto c : minus(low, ss.supernode).ones()) pairs.emplace_back(c, true);
  return Superset{CharacterAssignment(std::move(pairs)), low, std::move(ss.members)};
}

// Splits on c with the c-edge placed as deep as possible: it enters the
// LCA of the (c, 1) side from that LCA with c cleared. The edge's tail is
// added to the (c, 0) side as one more node to span, so whatever path the
// two sides share is built once.
std::pair<Superset, Superset> anchored_split(const Superset& ss, std::size_t c,
                                             std::vector<Edge>& edges) {
  auto [zero, one] = split(ss, c);
  const Node low = lca(one.members);
  const Node anchor = low.with(c, false);
  edges.push_back(Edge{anchor, low});

  auto pairs = one.assignment.pairs();
  for (auto d : minus(low, one.supernode).ones()) pairs.emplace_back(d, true);
  one = Superset{CharacterAssignment(std::move(pairs)), low, std::move(one.members)};

  auto at = std::lower_bound(zero.members.begin(), zero.members.end(), anchor);
  if (at == zero.members.end() || *at != anchor) zero.members.insert(at, anchor);
  return {std::move(zero), std::move(one)};
}

void peel_into(WorkItem item, PeelResult& out) {
  item.superset = tighten(std::move(item.superset), out.edges);
  auto c = peelable(item);
  if (!c) {
    out.leaves.push_back(std::move(item));
    return;
  }
  auto [zero, one] = anchored_split(item.superset, *c, out.edges);
  ++out.splits;
  peel_into(make_work_item(std::move(zero)), out);
  peel_into(make_work_item(std::move(one)), out);
}

std::vector<std::size_t> distinct_conflicting(const std::vector<WorkItem>& items) {
  std::vector<std::size_t> out;
  for (const auto& item : items) {
    auto cs = item.local_cg.conflicting_characters();
    out.insert(out.end(), cs.begin(), cs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Exact tree below the supernode of a leaf superset.
Arborescence solve_residual(const Superset& ss, ResidualSolver solver) {
  const Node& sn = ss.supernode;
  const std::size_t m = sn.dim();
  std::vector<Node> shifted;
  shifted.reserve(ss.members.size());
  for (const auto& t : ss.members) shifted.push_back(minus(t, sn));
  Instance sub = normalize(RawInstance(m, std::move(shifted)));

  Arborescence reduced;
  if (sub.trivial()) {
    reduced = Arborescence(sub.root());
  } else if (solver == ResidualSolver::kOracle) {
    if (!oracle_admits(sub)) {
      throw Refused("residual superset with " + std::to_string(sub.terminals().size()) +
                    " terminals on " + std::to_string(sub.m()) +
                    " characters is beyond the oracle; raise q or retry with another seed");
    }
    reduced = oracle_solve(sub);
  } else {
    reduced = solve_dw(sub);
  }
  Arborescence lifted = lift(reduced, sub.record());
  Arborescence grafted(sn);
  for (const auto& e : lifted.edges()) grafted.add_edge(e.parent | sn, e.child | sn);
  return grafted;
}

}  // namespace

WorkItem make_work_item(Superset ss) {
  ConflictGraph cg = build_cg(ss.members, ss.supernode.dim());
  return WorkItem{std::move(ss), std::move(cg)};
}

PeelResult peel(const Superset& ss) {
  PeelResult out;
  peel_into(make_work_item(ss), out);
  return out;
}

Arborescence solve_randomized(const Instance& inst, const RunConfig& cfg, RunStats* stats) {
  RunStats local;
  const std::size_t m = inst.m();
  Arborescence tree(inst.root());
  if (inst.trivial()) {
    if (stats) *stats = local;
    return tree;
  }

  PeelResult state = peel(whole(inst.terminals(), m));

  std::mt19937_64 rng(cfg.seed);

  for (;;) {
    auto conflicting = distinct_conflicting(state.leaves);
    if (conflicting.size() <= cfg.q_budget) break;
    if (local.loop_iterations == cfg.q_budget) {
      throw Refused(std::to_string(conflicting.size()) + " conflicting characters remain after " +
                    std::to_string(cfg.q_budget) + " random splits");
    }
    std::uniform_int_distribution<std::size_t> pick(0, conflicting.size() - 1);
    const std::size_t c = conflicting[pick(rng)];
    ++local.loop_iterations;

    PeelResult next;
    next.edges = std::move(state.edges);
    next.splits = state.splits;
    for (auto& item : state.leaves) {
      if (item.local_cg.neighbors(c).empty()) {
        next.leaves.push_back(std::move(item));
        continue;
      }
      auto [zero, one] = anchored_split(item.superset, c, next.edges);
      ++local.random_splits;
      peel_into(make_work_item(std::move(zero)), next);
      peel_into(make_work_item(std::move(one)), next);
    }
    state = std::move(next);
  }

  for (const auto& e : state.edges) tree.add_edge(e.parent, e.child);
  for (const auto& item : state.leaves) {
    auto conflicting = item.local_cg.conflicting_characters();
    if (conflicting.size() > cfg.q_budget) {
      throw std::logic_error("residual superset keeps more than q conflicting characters");
    }
    if (!conflicting.empty()) {
      ++local.residual_supersets;
      local.max_residual_conflicts = std::max(local.max_residual_conflicts, conflicting.size());
      local.max_residual_members = std::max(local.max_residual_members, item.superset.members.size());
    }
    tree.merge(solve_residual(item.superset, cfg.residual));
  }
  if (cfg.q_budget < 64 && local.residual_supersets > (std::uint64_t{1} << cfg.q_budget)) {
    throw std::logic_error("more than 2^q residual supersets");
  }
  local.peel_splits = state.splits;
  if (stats) *stats = local;
  return tree;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial));
}

std::size_t default_repetitions(std::size_t q_budget) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  if (q_budget >= 32) return kMax;
  return std::size_t{1} << (2 * q_budget);
}

Arborescence solve_derandomized(const Instance& inst, const RunConfig& cfg, DerandStats* stats) {
  std::size_t trials = cfg.repetitions ? cfg.repetitions : default_repetitions(cfg.q_budget);
  // Without conflicts no random choice is ever made.
  if (build_cg(inst.terminals(), inst.m()).edgeless()) trials = 1;

  struct Best {
    std::size_t cost = std::numeric_limits<std::size_t>::max();
    std::size_t trial = 0;
    std::optional<Arborescence> tree;
    bool beats(std::size_t c, std::size_t t) const { return !tree || c < cost || (c == cost && t < trial); }
  };
  Best best;
  std::size_t refused = 0;
  std::string first_failure;
  std::exception_ptr internal;

#pragma omp parallel
  {
    Best mine;
    std::size_t mine_refused = 0;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
      RunConfig trial_cfg = cfg;
      trial_cfg.seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(t));
      try {
        Arborescence tree = solve_randomized(inst, trial_cfg);
        auto idx = static_cast<std::size_t>(t);
        if (mine.beats(tree.cost(), idx)) mine = Best{tree.cost(), idx, std::move(tree)};
      } catch (const Refused& e) {
        ++mine_refused;
#pragma omp critical(msa_derand_failure)
        if (first_failure.empty()) first_failure = e.what();
      } catch (...) {
#pragma omp critical(msa_derand_failure)
        if (!internal) internal = std::current_exception();
      }
    }
#pragma omp critical(msa_derand_reduce)
    {
      refused += mine_refused;
      if (mine.tree && best.beats(mine.cost, mine.trial)) best = std::move(mine);
    }
  }
  if (internal) std::rethrow_exception(internal);
  if (!best.tree) {
    throw Refused("all " + std::to_string(trials) + " trials refused: " + first_failure);
  }
  if (stats) *stats = DerandStats{trials, refused, best.trial};
  return std::move(*best.tree);
}

}  // namespace msa
