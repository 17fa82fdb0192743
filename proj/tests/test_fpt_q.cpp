#include <random>

#include "doctest.h"
#include "msa/error.hpp"
#include "msa/exact.hpp"
#include "msa/fpt_q.hpp"
#include "msa/generators.hpp"
#include "oracles.hpp"

using msa::Instance;
using msa::Node;
using msa::RunConfig;
using oracle::bits;
using oracle::nodes;

namespace {

Instance triangle() { return Instance::from_normalized(3, nodes({"000", "011", "101", "110"})); }
Instance square() { return Instance::from_normalized(2, nodes({"00", "01", "10", "11"})); }

RunConfig config(std::size_t q, std::uint64_t seed) {
  RunConfig cfg;
  cfg.q_budget = q;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("peeling a conflict-free superset leaves nothing in conflict") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto inst = msa::normalize(msa::gen_laminar(3 + seed % 12, seed));
    auto peeled = msa::peel(msa::whole(inst.terminals(), inst.m()));
    for (const auto& leaf : peeled.leaves) CHECK(leaf.local_cg.edgeless());
    auto tree = msa::solve_randomized(inst, config(0, seed));
    CHECK(tree.cost() == inst.m());
    CHECK(msa::validate(inst, tree).ok());
  }
}

TEST_CASE("a superset with only constant characters is not split") {
  auto ss = msa::whole(nodes({"0110"}), 4);
  auto peeled = msa::peel(ss);
  CHECK(peeled.splits == 0);
  REQUIRE(peeled.leaves.size() == 1);
  CHECK(peeled.leaves[0].superset.members == nodes({"0110"}));
}

TEST_CASE("peel stops at characters that all conflict") {
  auto peeled = msa::peel(msa::whole(triangle().terminals(), 3));
  CHECK(peeled.splits == 0);
  REQUIRE(peeled.leaves.size() == 1);
  CHECK(peeled.leaves[0].local_cg.edge_count() == 3);
}

TEST_CASE("peel splits a non-conflicting character first") {
  // Character 0 only ever appears with 1 in character 1.
  auto r = nodes({"0000", "0100", "1100", "0011", "0101", "0110"});
  auto peeled = msa::peel(msa::whole(r, 4));
  CHECK(peeled.splits >= 1);
  std::size_t members = 0;
  for (const auto& leaf : peeled.leaves) members += leaf.superset.members.size();
  CHECK(members >= r.size());
}

TEST_CASE("square with budget one") {
  auto inst = square();
  bool reached = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    try {
      auto tree = msa::solve_randomized(inst, config(1, seed));
      CHECK(msa::validate(inst, tree).ok());
      CHECK(tree.cost() >= 3);
      reached |= tree.cost() == 3;
    } catch (const msa::Refused&) {
    }
  }
  CHECK(reached);
}

TEST_CASE("triangle needs budget two") {
  auto inst = triangle();
  CHECK_THROWS_AS(msa::solve_randomized(inst, config(0, 1)), msa::Refused);
  bool reached = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    try {
      auto tree = msa::solve_randomized(inst, config(2, seed));
      CHECK(msa::validate(inst, tree).ok());
      CHECK(tree.cost() >= 5);
      reached |= tree.cost() == 5;
    } catch (const msa::Refused&) {
    }
  }
  CHECK(reached);
}

TEST_CASE("seeds and repetition counts") {
  CHECK(msa::trial_seed(7, 3) == msa::trial_seed(7, 3));
  CHECK(msa::trial_seed(7, 3) != msa::trial_seed(7, 4));
  CHECK(msa::trial_seed(7, 3) != msa::trial_seed(8, 3));
  CHECK(msa::default_repetitions(0) == 1);
  CHECK(msa::default_repetitions(1) == 4);
  CHECK(msa::default_repetitions(3) == 64);
  CHECK(msa::default_repetitions(40) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("randomized runs are deterministic for a seed") {
  auto inst = triangle();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto a = msa::solve_randomized(inst, config(2, seed));
    auto b = msa::solve_randomized(inst, config(2, seed));
    CHECK(a == b);
  }
}

TEST_CASE("derandomized keeps the cheapest and earliest trial") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 25; ++round) {
    std::size_t m = 3 + rng() % 4;
    auto inst = msa::normalize(msa::RawInstance(m, oracle::random_nodes(rng, m, 3 + rng() % 4)));
    if (inst.trivial()) continue;
    RunConfig cfg = config(2, rng());
    cfg.repetitions = 12;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t best_trial = 0;
    std::size_t refused = 0;
    bool edgeless = msa::build_cg(inst.terminals(), inst.m()).edgeless();
    std::size_t trials = edgeless ? 1 : cfg.repetitions;
    for (std::size_t t = 0; t < trials; ++t) {
      try {
        auto c = msa::solve_randomized(inst, config(2, msa::trial_seed(cfg.seed, t))).cost();
        if (c < best) best = c, best_trial = t;
      } catch (const msa::Refused&) {
        ++refused;
      }
    }
    if (refused == trials) {
      CHECK_THROWS_AS(msa::solve_derandomized(inst, cfg), msa::Refused);
      continue;
    }
    msa::DerandStats stats;
    auto tree = msa::solve_derandomized(inst, cfg, &stats);
    CHECK(tree.cost() == best);
    CHECK(stats.best_trial == best_trial);
    CHECK(stats.trials == trials);
    CHECK(stats.refused == refused);
  }
}

TEST_CASE("run statistics stay within the budget") {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 200; ++round) {
    std::size_t m = 3 + rng() % 6;
    auto inst = msa::normalize(msa::RawInstance(m, oracle::random_nodes(rng, m, 3 + rng() % 5)));
    if (inst.trivial()) continue;
    std::size_t q = rng() % 4;
    msa::RunStats stats;
    try {
      auto tree = msa::solve_randomized(inst, config(q, rng()), &stats);
      CHECK(msa::validate(inst, tree).ok());
      CHECK(tree.cost() >= msa::solve_dw(inst).cost());
      CHECK(stats.loop_iterations <= q);
      CHECK(stats.residual_supersets <= (std::size_t{1} << q));
      CHECK(stats.max_residual_conflicts <= q);
    } catch (const msa::Refused&) {
    }
  }
}

TEST_CASE("oracle residuals also give valid trees") {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 60; ++round) {
    std::size_t m = 3 + rng() % 4;
    auto inst = msa::normalize(msa::RawInstance(m, oracle::random_nodes(rng, m, 3 + rng() % 4)));
    if (inst.trivial()) continue;
    RunConfig a = config(2, rng());
    RunConfig b = a;
    b.residual = msa::ResidualSolver::kOracle;
    try {
      auto x = msa::solve_randomized(inst, a);
      auto y = msa::solve_randomized(inst, b);
      CHECK(msa::validate(inst, x).ok());
      CHECK(msa::validate(inst, y).ok());
      CHECK(y.cost() >= msa::oracle_solve(inst).cost());
    } catch (const msa::Refused&) {
    }
  }
}
