// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All instances are seeded; reruns print the same
// verdicts (timings aside).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "msa/approx.hpp"
#include "msa/driver.hpp"
#include "msa/error.hpp"
#include "msa/exact.hpp"
#include "msa/fpt_q.hpp"
#include "msa/generators.hpp"
#include "oracles.hpp"

using msa::Arborescence;
using msa::Instance;
using msa::Node;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Verdict> verdicts;

// Printed in criterion order once everything has run.
void report(int id, bool pass, const std::string& detail) { verdicts.push_back({id, pass, detail}); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Case {
  std::string family;
  Instance inst;
};

// Root plus `extra` distinct non-root nodes; skipped when normalization
// leaves nothing to solve.
std::optional<Instance> rooted_random(std::mt19937_64& rng, std::size_t m, std::size_t extra) {
  std::vector<Node> r{Node(m)};
  for (const auto& n : oracle::random_nodes(rng, m, extra + 1)) {
    if (!n.is_zero() && r.size() < extra + 1) r.push_back(n);
  }
  auto inst = msa::normalize(msa::RawInstance(m, r));
  if (inst.trivial()) return std::nullopt;
  return inst;
}

std::vector<Node> level_nodes(std::mt19937_64& rng, std::size_t m, std::size_t k, std::size_t count) {
  std::set<Node> out;
  for (std::size_t guard = 0; out.size() < count && guard < 1000; ++guard) {
    Node n(m);
    while (n.level() < k) n = n.with(rng() % m, true);
    out.insert(n);
  }
  return {out.begin(), out.end()};
}

Instance gadget(const msa::SimpleGraph& g) { return msa::normalize(msa::gen_from_graph(g)); }

std::vector<Case> build_suite() {
  std::vector<Case> suite;
  std::mt19937_64 rng(20240601);
  while (suite.size() < 250) {
    std::size_t m = 2 + rng() % 5;
    if (auto inst = rooted_random(rng, m, 1 + rng() % 4)) suite.push_back({"small", *inst});
  }
  for (std::size_t n = 0; n < 100;) {
    std::size_t m = 5 + rng() % 6;
    if (auto inst = rooted_random(rng, m, 3 + rng() % 6)) {
      if (!msa::oracle_admits(*inst)) continue;
      suite.push_back({"medium", *inst});
      ++n;
    }
  }
  for (std::size_t n = 0; n < 50;) {
    std::size_t m = 3 + rng() % 5;
    std::vector<Node> r{Node(m)};
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v) {
        if (rng() % 3 == 0) r.push_back(Node::unit(m, u).with(v, true));
      }
    }
    auto inst = msa::normalize(msa::RawInstance(m, r));
    if (inst.trivial() || !msa::oracle_admits(inst)) continue;
    suite.push_back({"level2", inst});
    ++n;
  }
  for (std::size_t n = 0; n < 60;) {
    std::size_t m = 4 + rng() % 5;
    std::size_t k = 2 + rng() % 3;
    auto r = level_nodes(rng, m, k, 2 + rng() % 5);
    r.push_back(Node(m));
    auto inst = msa::normalize(msa::RawInstance(m, r));
    if (inst.trivial() || !msa::oracle_admits(inst)) continue;
    suite.push_back({"single-level", inst});
    ++n;
  }
  suite.push_back({"gadget", gadget(msa::complete_graph(3))});
  suite.push_back({"gadget", gadget(msa::complete_graph(4))});
  suite.push_back({"gadget", gadget(msa::path_graph(3))});
  suite.push_back({"gadget", gadget(msa::star_graph(4))});
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto inst = msa::normalize(msa::gen_laminar(3 + seed % 8, seed));
    if (msa::oracle_admits(inst)) suite.push_back({"laminar", inst});
  }
  return suite;
}

struct Solved {
  msa::Algo algo;
  Arborescence tree;
};

// Every applicable solver on one instance. fpt-q gets the oracle's
// penalty as its budget and at most 64 trials; q_opt reaches 14 here.
std::vector<Solved> run_all(const Instance& inst, std::size_t q_opt, std::size_t& refusals) {
  std::vector<Solved> out;
  for (auto a : msa::all_algos()) {
    msa::SolveOptions options;
    options.seed = 17;
    if (a == msa::Algo::kFptQ) {
      options.q = q_opt;
      options.reps = std::min<std::size_t>(64, msa::default_repetitions(q_opt));
    }
    if (a == msa::Algo::kLevel2 && inst.max_level() > 2) continue;
    try {
      out.push_back({a, msa::solve_normalized(inst, a, options)});
    } catch (const msa::Refused&) {
      ++refusals;
    }
  }
  return out;
}

void criterion1() {
  auto start = Clock::now();
  std::mt19937_64 rng(1);
  std::size_t n = 0, agree = 0, valid = 0;
  while (n < 250) {
    std::size_t m = 2 + rng() % 5;
    auto inst = rooted_random(rng, m, 1 + rng() % 4);
    if (!inst) continue;
    ++n;
    auto dw = msa::solve_dw(*inst);
    auto ex = msa::oracle_solve(*inst);
    agree += dw.cost() == ex.cost();
    valid += msa::validate(*inst, dw).ok() && msa::validate(*inst, ex).ok();
  }
  double secs = seconds_since(start);
  report(1, agree == n && valid == n && secs < 60,
         fmt("dw equals oracle on %zu/%zu instances (m<=6, |R|<=5), both valid on %zu, %.2f s", agree, n,
             valid, secs));
}

struct SuiteFacts {
  Case c;
  Arborescence opt;
  std::vector<Solved> outputs;
};

void criteria_on_suite(const std::vector<SuiteFacts>& facts, std::size_t refusals) {
  // 2: lower bounds
  {
    std::size_t checked = 0, bad = 0, oracle_checked = 0, oracle_bad = 0;
    for (const auto& f : facts) {
      const auto& inst = f.c.inst;
      std::size_t floor = std::max(inst.terminals().size() - 1, inst.m());
      for (const auto& s : f.outputs) {
        ++checked;
        bad += s.tree.cost() < floor;
      }
      if (inst.m() <= 10) {
        auto cg = msa::build_cg(inst.terminals(), inst.m());
        ++oracle_checked;
        oracle_bad += f.opt.cost() < inst.m() + oracle::mvc_size(inst.m(), cg.edges());
      }
    }
    report(2, bad == 0 && oracle_bad == 0 && oracle_checked > 0,
           fmt("%zu solver outputs, %zu below max(|R|-1, m); %zu oracle trees, %zu below m + |MVC| "
               "(%zu guard refusals skipped)",
               checked, bad, oracle_checked, oracle_bad, refusals));
  }
  // 4: cover-based ratio
  {
    std::size_t n = 0, bad = 0;
    double worst = 0;
    for (const auto& f : facts) {
      auto opt = f.opt.cost();
      auto q = opt - f.c.inst.m();
      auto cost = msa::solve_mvc(f.c.inst).cost();
      ++n;
      bad += cost > (1 + 2 * q) * opt;
      worst = std::max(worst, static_cast<double>(cost) / static_cast<double>(opt));
    }
    report(4, bad == 0, fmt("approx-mvc within (1+2q_opt) of the optimum on %zu/%zu instances, worst ratio %.3f",
                            n - bad, n, worst));
  }
  // 5: hitting-set ratio and the single-level slice bound
  {
    std::size_t n = 0, bad = 0, clamped = 0, clamped_literal_ok = 0;
    std::size_t slices = 0, slice_bad = 0;
    double worst = 0;
    for (const auto& f : facts) {
      const auto& inst = f.c.inst;
      auto opt = static_cast<double>(f.opt.cost());
      double ell = static_cast<double>(inst.max_level());
      double p_opt = static_cast<double>(f.opt.steiner_count(inst));
      double r = static_cast<double>(inst.terminals().size());
      double first = std::min(ell - 1, p_opt / 2);
      double second = std::min(ell, std::log(r) + 2);
      auto cost = static_cast<double>(msa::solve_mhs(inst).cost());
      ++n;
      worst = std::max(worst, cost / opt);
      if (first >= 1) {
        bad += cost > first * second * opt;
      } else {
        // The literal factor is below 1 here; a factor 0 would demand a
        // zero-cost tree, so the bound is applied with factor 1.
        ++clamped;
        clamped_literal_ok += cost <= first * second * opt;
        bad += cost > second * opt;
      }

      std::vector<Node> top;
      for (const auto& t : inst.terminals()) {
        if (!t.is_zero()) top.push_back(t);
      }
      std::size_t k = top.front().level();
      bool single = k >= 2 && std::all_of(top.begin(), top.end(), [&](const Node& t) { return t.level() == k; });
      if (single) {
        ++slices;
        auto family = msa::parent_family(top);
        double min_hit = static_cast<double>(oracle::min_hitting_set(family.family));
        double bound = 0.5 * min_hit * std::min(static_cast<double>(k), std::log(static_cast<double>(top.size())) + 2) * opt;
        slice_bad += static_cast<double>(msa::solve_level_slice(inst.m(), top).cost()) > bound;
      }
    }
    report(5, bad == 0 && slice_bad == 0 && slices > 0,
           fmt("approx-mhs within min(l-1, p_opt/2)*min(l, ln|R|+2) of the optimum on %zu/%zu instances "
               "(worst ratio %.3f; %zu instances had a first factor below 1 and were held to factor 1, "
               "%zu of them also met the unclamped bound); level slice bound with exhaustive MinHIT held on "
               "%zu/%zu single-level instances",
               n - bad, n, worst, clamped, clamped_literal_ok, slices - slice_bad, slices));
  }
  // 9: bad characters cover the conflict graph
  {
    std::size_t outputs = 0, bad = 0, perfect = 0, perfect_bad = 0;
    for (const auto& f : facts) {
      auto cg = msa::build_cg(f.c.inst.terminals(), f.c.inst.m());
      for (const auto& s : f.outputs) {
        ++outputs;
        bad += !msa::is_vertex_cover(cg, s.tree.bad_characters());
      }
      if (cg.edgeless()) {
        ++perfect;
        perfect_bad += !msa::perfect_arborescence(f.c.inst).bad_characters().empty();
      }
    }
    report(9, bad == 0 && perfect_bad == 0 && perfect > 0,
           fmt("bad characters cover CG(R) on %zu/%zu solver outputs; perfect trees without bad characters "
               "%zu/%zu",
               outputs - bad, outputs, perfect - perfect_bad, perfect));
  }
}

void criterion3() {
  std::size_t n = 0, exact = 0;
  std::string first_miss;
  for (std::uint64_t seed = 100; n < 60; ++seed) {
    auto inst = msa::normalize(msa::gen_laminar(3 + seed % 14, seed));
    ++n;
    std::vector<std::pair<const char*, std::size_t>> costs{
        {"perfect", msa::perfect_arborescence(inst).cost()},
        {"mvc", msa::solve_mvc(inst).cost()},
        {"mhs", msa::solve_mhs(inst).cost()},
        {"dw", msa::solve_dw(inst).cost()},
        {"randomized", msa::solve_randomized(inst, msa::RunConfig{0, seed}).cost()},
    };
    bool all = true;
    for (auto [name, c] : costs) {
      if (c != inst.m()) {
        all = false;
        if (first_miss.empty()) first_miss = fmt(" (first miss: %s on seed %llu)", name, (unsigned long long)seed);
      }
    }
    exact += all;
  }
  report(3, exact == n, fmt("all five solvers cost exactly m on %zu/%zu laminar instances%s", exact, n,
                            first_miss.c_str()));
}

void criterion6() {
  auto start = Clock::now();
  // Two instances per budget, taken in generation order.
  std::map<std::size_t, std::vector<Instance>> picked;
  std::mt19937_64 rng(606);
  while (picked[1].size() < 2 || picked[2].size() < 2 || picked[3].size() < 2) {
    std::size_t m = 3 + rng() % 4;
    auto inst = rooted_random(rng, m, 3 + rng() % 4);
    if (!inst) continue;
    std::size_t q = msa::oracle_solve(*inst).cost() - inst->m();
    if (q >= 1 && q <= 3 && picked[q].size() < 2) picked[q].push_back(*inst);
  }
  constexpr std::size_t kRuns = 2000;
  constexpr std::size_t kWrappers = 100;
  bool freq_ok = true;
  std::size_t wrapper_hits = 0, wrapper_total = 0, instances = 0, instances_95 = 0;
  std::string lines;
  for (const auto& [q, list] : picked) {
    for (const auto& inst : list) {
      ++instances;
      std::size_t opt = msa::oracle_solve(inst).cost();
      std::size_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(dynamic, 16)
      for (std::int64_t run = 0; run < static_cast<std::int64_t>(kRuns); ++run) {
        msa::RunConfig cfg{q, msa::trial_seed(6000 + q, static_cast<std::uint64_t>(run))};
        try {
          hits += msa::solve_randomized(inst, cfg).cost() == opt;
        } catch (const msa::Refused&) {
        }
      }
      double p = std::pow(4.0, -static_cast<double>(q));
      double floor = p - 3 * std::sqrt(p * (1 - p) / kRuns);
      double freq = static_cast<double>(hits) / kRuns;
      freq_ok &= freq >= floor;

      std::size_t ok = 0;
      for (std::size_t w = 0; w < kWrappers; ++w) {
        msa::RunConfig cfg{q, 90000 + w};
        try {
          ok += msa::solve_derandomized(inst, cfg).cost() == opt;
        } catch (const msa::Refused&) {
        }
      }
      wrapper_hits += ok;
      instances_95 += ok * 100 >= 95 * kWrappers;
      wrapper_total += kWrappers;
      lines += fmt("\n    q_opt=%zu m=%zu |R|=%zu: single-run frequency %.4f (floor %.4f), derandomized optimal "
                   "%zu/%zu",
                   q, inst.m(), inst.terminals().size(), freq, floor, ok, kWrappers);
    }
  }
  double share = static_cast<double>(wrapper_hits) / static_cast<double>(wrapper_total);
  double secs = seconds_since(start);
  report(6, freq_ok && share >= 0.95 && instances_95 == instances && instances >= 5 && secs < 300,
         fmt("%zu instances, %zu runs each at q_budget = q_opt; derandomized optimal on %.1f%% of %zu "
             "(instance, wrapper) pairs and on >= 95 of %zu wrapper runs for %zu/%zu instances, %.1f s",
             instances, kRuns, 100 * share, wrapper_total, kWrappers, instances_95, instances, secs) +
             lines);
}

void criterion7() {
  std::mt19937_64 rng(707);
  std::size_t runs = 0, succeeded = 0, violations = 0, member_ok = 0;
  std::size_t max_iter = 0, max_res = 0, max_conf = 0;
  std::string internal;
  for (int i = 0; i < 400; ++i) {
    std::size_t m = 3 + rng() % 6;
    auto inst = rooted_random(rng, m, 2 + rng() % 6);
    if (!inst) continue;
    std::size_t q = rng() % 5;
    for (std::uint64_t s = 0; s < 10; ++s) {
      ++runs;
      msa::RunStats st;
      try {
        msa::solve_randomized(*inst, msa::RunConfig{q, rng()}, &st);
      } catch (const msa::Refused&) {
        continue;
      } catch (const std::logic_error& e) {
        ++violations;
        if (internal.empty()) internal = e.what();
        continue;
      }
      ++succeeded;
      violations += st.loop_iterations > q || st.residual_supersets > (std::size_t{1} << q) ||
                    st.max_residual_conflicts > q;
      member_ok += st.max_residual_members <= 2 * q + 1;
      max_iter = std::max(max_iter, st.loop_iterations);
      max_res = std::max(max_res, st.residual_supersets);
      max_conf = std::max(max_conf, st.max_residual_conflicts);
    }
  }
  report(7, violations == 0 && succeeded > 0,
         fmt("%zu runs (%zu completed, rest refused), %zu bound violations%s; max loop iterations %zu, residual "
             "supersets %zu, residual conflicting characters %zu; member bound 2q+1 held on %zu/%zu completed runs",
             runs, succeeded, violations, internal.empty() ? "" : (" [" + internal + "]").c_str(), max_iter,
             max_res, max_conf, member_ok, succeeded));
}

void criterion8() {
  struct Gadget {
    const char* name;
    msa::SimpleGraph g;
  };
  std::vector<Gadget> gadgets{{"K3", msa::complete_graph(3)},
                              {"K4", msa::complete_graph(4)},
                              {"3-path", msa::path_graph(3)},
                              {"3-star", msa::star_graph(4)}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, g] : gadgets) {
    auto raw = msa::gen_from_graph(g);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [u, v] : g.edges) edges.emplace_back(u - 1, v - 1);
    std::size_t expected = oracle::mvc_size(g.n, edges) + g.edges.size();
    std::size_t oracle_cost = msa::solve(raw, msa::Algo::kOracle).tree.cost();
    std::size_t level2 = msa::solve(raw, msa::Algo::kLevel2).tree.cost();
    ok &= oracle_cost == expected && level2 == oracle_cost;
    detail += fmt("%s%s oracle %zu, |MVC|+|E| %zu, level2 %zu", detail.empty() ? "" : "; ", name, oracle_cost,
                  expected, level2);
  }
  report(8, ok, detail);
}

void criterion10() {
  auto start = Clock::now();
  constexpr std::size_t kFamilies = 5;
  double worst = 0;
  bool ok = true;
  for (std::size_t f = 0; f < kFamilies; ++f) {
    std::mt19937_64 rng(1000 + f);
    const std::size_t m = 24;
    auto pool = oracle::random_nodes(rng, m, 20);
    std::vector<Node> r{Node(m)};
    for (const auto& n : pool) {
      if (!n.is_zero()) r.push_back(n);
    }
    std::uint64_t previous = 0;
    for (std::size_t size = 8; size <= 14; ++size) {
      std::vector<Node> prefix(r.begin(), r.begin() + static_cast<long>(size));
      auto inst = msa::normalize(msa::RawInstance(m, prefix));
      msa::DwStats stats;
      msa::solve_dw(inst, {}, &stats);
      if (inst.terminals().size() != size) ok = false;
      if (previous) {
        double growth = static_cast<double>(stats.split_work) / static_cast<double>(previous);
        worst = std::max(worst, growth);
      }
      previous = stats.split_work;
    }
  }
  double secs = seconds_since(start);
  report(10, ok && worst <= 3.05 && secs < 120,
         fmt("split work growth per added terminal at most %.4f over %zu families (|R| 8..14), %.2f s", worst,
             kFamilies, secs));
}

}  // namespace

int main() {
  criterion1();

  auto suite = build_suite();
  std::vector<SuiteFacts> facts;
  std::size_t refusals = 0;
  for (auto& c : suite) {
    auto opt = msa::oracle_solve(c.inst);
    auto q_opt = opt.cost() - c.inst.m();
    auto outputs = run_all(c.inst, q_opt, refusals);
    facts.push_back({c, opt, std::move(outputs)});
  }
  criteria_on_suite(facts, refusals);
  criterion3();
  criterion6();
  criterion7();
  criterion8();
  criterion10();

  std::sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) { return a.id < b.id; });
  std::size_t passed = 0;
  for (const auto& v : verdicts) {
    std::printf("criterion %d %s: %s\n", v.id, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    passed += v.pass;
  }
  std::printf("%zu/%zu criteria passed\n", passed, verdicts.size());
  return passed == verdicts.size() ? 0 : 1;
}
