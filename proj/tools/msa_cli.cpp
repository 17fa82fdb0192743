// Command-line front end: solve, generate, check and benchmark instances.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "msa/bench.hpp"
#include "msa/driver.hpp"
#include "msa/error.hpp"
#include "msa/generators.hpp"
#include "msa/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kRefused = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    msa::write_file(path, text);
  }
}

struct SolveArgs {
  std::string instance;
  std::string algo = "dw";
  std::string dot;
  std::string out;
  std::uint64_t seed = 0;
  int q = -1;
  std::size_t reps = 0;
  std::string hs = "best";
  std::string residual = "dw";
  bool ratio = false;
};

int cmd_solve(const SolveArgs& args) {
  auto algo = msa::parse_algo(args.algo);
  if (!algo) throw msa::InvalidInput("unknown algorithm " + args.algo);
  static const std::map<std::string, msa::HsStrategy> strategies{
      {"greedy", msa::HsStrategy::kGreedy},
      {"take-all", msa::HsStrategy::kTakeAll},
      {"best", msa::HsStrategy::kBestOfBoth}};

  msa::SolveOptions options;
  options.seed = args.seed;
  if (args.q >= 0) options.q = static_cast<std::size_t>(args.q);
  options.reps = args.reps;
  options.hs_strategy = strategies.at(args.hs);
  options.residual = args.residual == "oracle" ? msa::ResidualSolver::kOracle : msa::ResidualSolver::kDw;

  msa::RawInstance raw = msa::read_instance_file(args.instance);
  const auto start = std::chrono::steady_clock::now();
  msa::SolveOutcome result = msa::solve(raw, *algo, options);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  auto report = msa::validate(raw.m, raw.terminals, result.tree);
  std::printf("algorithm: %s\n", args.algo.c_str());
  std::printf("cost: %zu\n", result.tree.cost());
  // p and q refer to the normalized instance.
  std::printf("p: %zu\n", result.reduced.steiner_count(result.instance));
  std::printf("q: %lld\n", static_cast<long long>(result.reduced.penalty(result.instance)));
  std::printf("time_ms: %.3f\n", ms);
  if (*algo == msa::Algo::kFptQ) {
    std::printf("seed: %llu\n", static_cast<unsigned long long>(args.seed));
    if (result.q_used) std::printf("q_budget: %zu\n", *result.q_used);
  }
  if (args.ratio) {
    std::size_t ref = msa::reference_cost(result.instance);
    double r = ref ? static_cast<double>(result.reduced.cost()) / ref : 1.0;
    std::printf("ratio: %.4f\n", r);
  }
  std::printf("status: %s\n", report.ok() ? "valid" : "invalid");
  if (!report.ok()) {
    std::fprintf(stderr, "%s\n", report.str().c_str());
    return kError;
  }
  if (!args.dot.empty()) emit(args.dot, msa::render_dot(result.tree));
  if (!args.out.empty()) emit(args.out, msa::render_tree(result.tree));
  return kOk;
}

int cmd_check(const std::string& instance, const std::string& tree) {
  msa::RawInstance raw = msa::read_instance_file(instance);
  msa::Arborescence arb = msa::read_tree_file(tree);
  auto report = msa::validate(raw.m, raw.terminals, arb);
  if (report.ok()) {
    std::printf("valid, cost %zu\n", arb.cost());
    return kOk;
  }
  std::printf("invalid\n%s\n", report.str().c_str());
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum Steiner arborescence on the directed hypercube"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("instance", solve.instance, "instance file (\"msa <m>\" header)")
      ->required()
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--algo", solve.algo, "dw | oracle | fpt-q | approx-mvc | approx-mhs | level2")
      ->check(CLI::IsMember({"dw", "oracle", "fpt-q", "approx-mvc", "approx-mhs", "level2"}));
  solve_cmd->add_option("--dot", solve.dot, "write the tree as Graphviz DOT ('-' for stdout)");
  solve_cmd->add_option("--out", solve.out, "write the tree file ('-' for stdout)");
  solve_cmd->add_option("--seed", solve.seed, "fpt-q seed");
  solve_cmd->add_option("--q", solve.q, "fpt-q penalty budget (default: smallest that succeeds)")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--reps", solve.reps, "fpt-q trials per budget (default ceil(4^q))");
  solve_cmd->add_option("--hs-strategy", solve.hs, "approx-mhs hitting sets: greedy | take-all | best")
      ->check(CLI::IsMember({"greedy", "take-all", "best"}));
  solve_cmd->add_option("--residual", solve.residual, "fpt-q residual solver: dw | oracle")
      ->check(CLI::IsMember({"dw", "oracle"}));
  solve_cmd->add_flag("--ratio", solve.ratio, "also report cost / optimum");

  std::size_t gm = 0, gn = 0, glevel = 0;
  std::uint64_t gseed = 0;
  std::string gout;
  auto* random_cmd = app.add_subcommand("gen-random", "random instance");
  random_cmd->add_option("--m", gm, "dimension")->required();
  random_cmd->add_option("--n", gn, "number of terminals")->required();
  random_cmd->add_option("--max-level", glevel, "largest terminal level (default m)");
  random_cmd->add_option("--seed", gseed, "seed");
  random_cmd->add_option("-o,--out", gout, "output file (default stdout)");

  std::string graph_file, graph_out;
  std::size_t complete = 0, path = 0, star = 0;
  auto* graph_cmd = app.add_subcommand("gen-graph", "vertex-cover gadget instance of a graph");
  auto* graph_src = graph_cmd->add_option("graph", graph_file, "graph file (\"graph <n>\", then \"u v\" lines)")
                        ->check(CLI::ExistingFile);
  auto* kn = graph_cmd->add_option("--complete", complete, "K_n");
  auto* pn = graph_cmd->add_option("--path", path, "path on n vertices");
  auto* sn = graph_cmd->add_option("--star", star, "star on n vertices");
  graph_src->excludes(kn)->excludes(pn)->excludes(sn);
  kn->excludes(pn)->excludes(sn);
  pn->excludes(sn);
  graph_cmd->add_option("-o,--out", graph_out, "output file (default stdout)");

  std::string check_instance, check_tree;
  auto* check_cmd = app.add_subcommand("check", "validate a tree file against an instance");
  check_cmd->add_option("instance", check_instance)->required()->check(CLI::ExistingFile);
  check_cmd->add_option("tree", check_tree)->required()->check(CLI::ExistingFile);

  msa::BenchConfig bench;
  std::string csv;
  bool serial = false;
  auto* bench_cmd = app.add_subcommand("bench", "solver comparison on generated families");
  bench_cmd->add_option("--seed", bench.seed, "seed");
  bench_cmd->add_option("--instances", bench.random_instances, "random instances");
  bench_cmd->add_option("--m", bench.random_m, "dimension of random instances");
  bench_cmd->add_option("--terminals", bench.random_terminals, "terminals per random instance");
  bench_cmd->add_option("--gadget-max", bench.gadget_max, "largest K_n gadget");
  bench_cmd->add_option("--fpt-runs", bench.fpt_runs, "fpt-q runs per instance");
  bench_cmd->add_option("--csv", csv, "write comma-separated rows ('-' for stdout)");
  bench_cmd->add_flag("--serial", serial, "one cell at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*random_cmd) {
      if (random_cmd->count("--max-level") == 0) glevel = gm;
      emit(gout, msa::render_instance(msa::gen_random(gm, gn, glevel, gseed)));
      return kOk;
    }
    if (*graph_cmd) {
      msa::SimpleGraph g;
      if (!graph_file.empty()) {
        std::ifstream in(graph_file);
        g = msa::parse_graph(in);
      } else if (complete) {
        g = msa::complete_graph(complete);
      } else if (path) {
        g = msa::path_graph(path);
      } else if (star) {
        g = msa::star_graph(star);
      } else {
        throw msa::InvalidInput("give a graph file or one of --complete, --path, --star");
      }
      emit(graph_out, msa::render_instance(msa::gen_from_graph(g)));
      return kOk;
    }
    if (*check_cmd) return cmd_check(check_instance, check_tree);
    if (*bench_cmd) {
      bench.parallel = !serial;
      auto rows = msa::run_bench(bench);
      std::cout << msa::bench_table(rows);
      if (!csv.empty()) emit(csv, msa::bench_csv(rows));
      return kOk;
    }
  } catch (const msa::Refused& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return kRefused;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  }
  return kError;
}
