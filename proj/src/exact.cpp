#include "msa/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "msa/error.hpp"

namespace msa {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

std::vector<std::uint32_t> lca_levels(std::span<const Node> keys) {
  const std::size_t n = keys.size();
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> lvl(size, 0);
  if (n == 0) return lvl;
  const std::size_t words = keys.front().words().size();

  if (size * words <= (std::size_t{1} << 24)) {
    // acc[mask] = AND of keys in mask, built from mask minus its lowest key.
    std::vector<std::uint64_t> acc(size * words, 0);
    for (std::size_t mask = 1; mask < size; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      const std::size_t prev = mask & (mask - 1);
      auto key = keys[low].words();
      std::uint32_t pop = 0;
      for (std::size_t w = 0; w < words; ++w) {
        const auto v = prev == 0 ? key[w] : (acc[prev * words + w] & key[w]);
        acc[mask * words + w] = v;
        pop += static_cast<std::uint32_t>(std::popcount(v));
      }
      lvl[mask] = pop;
    }
  } else {
    for (std::size_t mask = 1; mask < size; ++mask) {
      Node acc = keys[static_cast<std::size_t>(std::countr_zero(mask))];
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) acc &= keys[i];
      }
      lvl[mask] = static_cast<std::uint32_t>(acc.level());
    }
  }
  return lvl;
}

SubsetTable make_table(std::span<const Node> keys) {
  if (keys.size() > kMaxSubsetKeys) {
    throw Refused("subset table limited to " + std::to_string(kMaxSubsetKeys) + " keys");
  }
  SubsetTable table;
  table.keys = keys.size();
  const std::size_t size = std::size_t{1} << keys.size();
  table.cost.assign(size, 0);
  table.split.assign(size, 0);
  table.lca_level = lca_levels(keys);
  return table;
}

// Minimizes over X = low | s for every subset s of the other keys, in
// ascending X, so the first strict minimum is the smallest X.
void relax_subset(SubsetTable& table, std::uint32_t mask, std::uint64_t& work) {
  const std::uint32_t low = mask & (~mask + 1);
  const std::uint32_t rest = mask ^ low;
  const auto* cost = table.cost.data();
  const auto* lvl = table.lca_level.data();
  std::uint32_t best = kInf;
  std::uint32_t best_x = 0;
  std::uint32_t s = 0;
  do {
    ++work;
    const std::uint32_t x = s | low;
    if (x != mask) {
      const std::uint32_t y = mask ^ x;
      const std::uint32_t value = cost[x] + lvl[x] + cost[y] + lvl[y];
      if (value < best) {
        best = value;
        best_x = x;
      }
    }
    s = (s - rest) & rest;
  } while (s != 0);
  table.cost[mask] = best - 2 * lvl[mask];
  table.split[mask] = best_x;
}

}  // namespace

SubsetTable fill_subset_table_serial(std::span<const Node> keys) {
  SubsetTable table = make_table(keys);
  const std::size_t size = table.cost.size();
  std::uint64_t work = 0;
  // Every proper submask is numerically smaller, so ascending order is a
  // valid evaluation order.
  for (std::size_t mask = 1; mask < size; ++mask) {
    if (std::popcount(mask) == 1) continue;
    relax_subset(table, static_cast<std::uint32_t>(mask), work);
  }
  table.split_work = work;
  return table;
}

SubsetTable fill_subset_table(std::span<const Node> keys) {
  SubsetTable table = make_table(keys);
  const std::size_t n = keys.size();
  const std::size_t size = table.cost.size();

  std::vector<std::vector<std::uint32_t>> layers(n + 1);
  for (std::size_t mask = 1; mask < size; ++mask) {
    layers[static_cast<std::size_t>(std::popcount(mask))].push_back(static_cast<std::uint32_t>(mask));
  }

  std::uint64_t work = 0;
  for (std::size_t k = 2; k <= n; ++k) {
    const auto& layer = layers[k];
    const auto count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : work) if (count >= 256)
    for (std::int64_t i = 0; i < count; ++i) {
      std::uint64_t local = 0;
      relax_subset(table, layer[static_cast<std::size_t>(i)], local);
      work += local;
    }
  }
  table.split_work = work;
  return table;
}

Arborescence solve_dw(const Instance& inst, const DwOptions& options, DwStats* stats) {
  if (inst.terminals().size() > options.max_terminals) {
    throw Refused("solve_dw: " + std::to_string(inst.terminals().size()) +
                  " terminals exceed the cap of " + std::to_string(options.max_terminals) +
                  "; use an approximation (approx-mvc, approx-mhs) instead");
  }
  std::vector<Node> keys;
  for (const auto& t : inst.terminals()) {
    if (!t.is_zero()) keys.push_back(t);
  }
  Arborescence tree{inst.root()};
  if (stats) {
    stats->keys = keys.size();
    stats->split_work = 0;
  }
  if (keys.empty()) return tree;

  const SubsetTable table =
      options.parallel ? fill_subset_table(keys) : fill_subset_table_serial(keys);
  if (stats) stats->split_work = table.split_work;

  auto lca_of = [&](std::uint32_t mask) {
    Node acc = keys[static_cast<std::size_t>(std::countr_zero(mask))];
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (mask >> i & 1) acc &= keys[i];
    }
    return acc;
  };

  const auto full = static_cast<std::uint32_t>((std::size_t{1} << keys.size()) - 1);
  tree.add_path(ose(inst.root(), lca_of(full)));
  std::vector<std::uint32_t> stack{full};
  while (!stack.empty()) {
    const std::uint32_t mask = stack.back();
    stack.pop_back();
    if (std::popcount(mask) == 1) continue;
    const std::uint32_t x = table.split[mask];
    const std::uint32_t y = mask ^ x;
    const Node top = lca_of(mask);
    tree.add_path(ose(top, lca_of(x)));
    tree.add_path(ose(top, lca_of(y)));
    stack.push_back(x);
    stack.push_back(y);
  }

  const std::size_t expected = table.cost[full] + table.lca_level[full];
  if (tree.cost() != expected) {
    throw std::logic_error("solve_dw: materialized cost " + std::to_string(tree.cost()) +
                           " differs from table cost " + std::to_string(expected));
  }
  return tree;
}

bool oracle_admits(const Instance& inst, const OracleLimits& limits) {
  // State table has 2^m * 2^(|R|-1) entries; cap it at 2^26 whatever the limits say.
  return inst.m() <= limits.max_m && inst.terminals().size() <= limits.max_terminals &&
         inst.m() + inst.terminals().size() - 1 <= 26;
}

Arborescence oracle_solve(const Instance& inst, const OracleLimits& limits) {
  if (!oracle_admits(inst, limits)) {
    throw Refused("oracle: instance with m=" + std::to_string(inst.m()) + " and " +
                  std::to_string(inst.terminals().size()) + " terminals exceeds the oracle budget");
  }
  const std::size_t m = inst.m();
  const std::size_t nodes = std::size_t{1} << m;

  auto encode = [](const Node& n) {
    std::uint32_t code = 0;
    for (auto c : n.ones()) code |= std::uint32_t{1} << c;
    return code;
  };
  auto decode = [m](std::uint32_t code) {
    Node n(m);
    for (std::size_t c = 0; c < m; ++c) {
      if (code >> c & 1) n.set(c);
    }
    return n;
  };

  std::vector<int> key_at(nodes, -1);
  std::size_t k = 0;
  for (const auto& t : inst.terminals()) {
    if (!t.is_zero()) key_at[encode(t)] = static_cast<int>(k++);
  }
  const std::size_t subsets = std::size_t{1} << k;

  enum class Kind : std::uint8_t { kNone, kEmpty, kSelf, kMerge, kEdge };
  struct Choice {
    Kind kind = Kind::kNone;
    std::uint32_t arg = 0;
  };
  std::vector<std::uint32_t> cost(subsets * nodes, kInf);
  std::vector<Choice> choice(subsets * nodes);
  for (std::size_t v = 0; v < nodes; ++v) {
    cost[v] = 0;
    choice[v] = {Kind::kEmpty, 0};
  }

  std::vector<std::uint32_t> by_level_desc(nodes);
  for (std::size_t v = 0; v < nodes; ++v) by_level_desc[v] = static_cast<std::uint32_t>(v);
  std::stable_sort(by_level_desc.begin(), by_level_desc.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });

  for (std::size_t s = 1; s < subsets; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    std::uint32_t* row = &cost[s * nodes];
    Choice* crow = &choice[s * nodes];
    const std::uint32_t low = set & (~set + 1);
    const std::uint32_t rest = set ^ low;
    for (std::size_t v = 0; v < nodes; ++v) {
      std::uint32_t best = kInf;
      Choice pick;
      const int key = key_at[v];
      if (key >= 0 && (set >> key & 1)) {
        const std::uint32_t without = set ^ (std::uint32_t{1} << key);
        const std::uint32_t c = cost[without * nodes + v];
        if (c < best) {
          best = c;
          pick = {Kind::kSelf, without};
        }
      }
      // Merge two nonempty parts at v; part one holds the lowest key.
      for (std::uint32_t sub = 0; sub != rest; sub = (sub - rest) & rest) {
        const std::uint32_t a = sub | low;
        const std::uint32_t b = set ^ a;
        const std::uint32_t c = cost[a * nodes + v] + cost[b * nodes + v];
        if (c < best) {
          best = c;
          pick = {Kind::kMerge, a};
        }
      }
      row[v] = best;
      crow[v] = pick;
    }
    for (auto v : by_level_desc) {
      for (std::size_t c = 0; c < m; ++c) {
        if (v >> c & 1) continue;
        const std::uint32_t w = v | (std::uint32_t{1} << c);
        if (row[w] >= kInf) continue;
        if (row[w] + 1 < row[v]) {
          row[v] = row[w] + 1;
          crow[v] = {Kind::kEdge, w};
        }
      }
    }
  }

  Arborescence tree{inst.root()};
  const auto full = static_cast<std::uint32_t>(subsets - 1);
  const std::uint32_t optimum = cost[full * nodes + 0];
  if (optimum >= kInf) throw std::logic_error("oracle: no arborescence found");
  struct State {
    std::uint32_t set;
    std::uint32_t node;
  };
  std::vector<State> stack{{full, 0}};
  while (!stack.empty()) {
    const auto [set, v] = stack.back();
    stack.pop_back();
    const Choice ch = choice[set * nodes + v];
    switch (ch.kind) {
      case Kind::kEmpty:
        break;
      case Kind::kSelf:
        stack.push_back({ch.arg, v});
        break;
      case Kind::kMerge:
        stack.push_back({ch.arg, v});
        stack.push_back({set ^ ch.arg, v});
        break;
      case Kind::kEdge:
        tree.add_edge(decode(v), decode(ch.arg));
        stack.push_back({set, ch.arg});
        break;
      case Kind::kNone:
        throw std::logic_error("oracle: broken choice table");
    }
  }
  if (tree.cost() != optimum) {
    throw std::logic_error("oracle: reconstructed cost differs from the table");
  }
  return tree;
}

namespace {

using EdgeList = std::vector<ConflictGraph::CharPair>;

std::size_t matching_bound(const EdgeList& edges, std::size_t m) {
  std::vector<bool> used(m, false);
  std::size_t size = 0;
  for (auto [u, v] : edges) {
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      ++size;
    }
  }
  return size;
}

EdgeList without(const EdgeList& edges, const std::vector<bool>& taken) {
  EdgeList out;
  for (auto e : edges) {
    if (!taken[e.first] && !taken[e.second]) out.push_back(e);
  }
  return out;
}

void branch(const EdgeList& edges, std::size_t m, std::vector<std::size_t>& chosen,
            VertexCover& best) {
  if (chosen.size() >= best.size()) return;
  if (edges.empty()) {
    best = chosen;
    return;
  }
  if (chosen.size() + matching_bound(edges, m) >= best.size()) return;

  std::vector<std::size_t> degree(m, 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  const auto pivot = static_cast<std::size_t>(
      std::max_element(degree.begin(), degree.end()) - degree.begin());

  std::vector<bool> taken(m, false);
  taken[pivot] = true;
  chosen.push_back(pivot);
  branch(without(edges, taken), m, chosen, best);
  chosen.pop_back();

  // Otherwise every neighbor of the pivot is in the cover.
  std::fill(taken.begin(), taken.end(), false);
  const std::size_t before = chosen.size();
  for (auto [u, v] : edges) {
    const std::size_t other = u == pivot ? v : (v == pivot ? u : m);
    if (other != m && !taken[other]) {
      taken[other] = true;
      chosen.push_back(other);
    }
  }
  branch(without(edges, taken), m, chosen, best);
  chosen.resize(before);
}

}  // namespace

VertexCover min_vertex_cover(const ConflictGraph& graph, std::span<const std::size_t> forced) {
  const std::size_t m = graph.m();
  std::vector<bool> taken(m, false);
  for (auto c : forced) {
    if (c >= m) throw InvalidInput("min_vertex_cover: forced vertex out of range");
    taken[c] = true;
  }
  const EdgeList rest = without(graph.edges(), taken);

  // Start from the 2-approximation so the search only has to improve on it.
  ConflictGraph residual(m, rest);
  VertexCover best = make_minimal(residual, vc_2approx(residual));
  std::vector<std::size_t> chosen;
  branch(rest, m, chosen, best);

  for (auto c : forced) best.push_back(c);
  std::sort(best.begin(), best.end());
  best.erase(std::unique(best.begin(), best.end()), best.end());
  return best;
}

ConflictGraph level2_graph(const Instance& inst) {
  ConflictGraph graph(inst.m());
  for (const auto& t : inst.terminals()) {
    const std::size_t lvl = t.level();
    if (lvl > 2) throw InvalidInput("solve_level2: terminal " + t.str() + " is above level 2");
    if (lvl == 2) {
      const auto ones = t.ones();
      graph.add_edge(ones[0], ones[1]);
    }
  }
  return graph;
}

Arborescence solve_level2(const Instance& inst) {
  const ConflictGraph graph = level2_graph(inst);
  std::vector<std::size_t> forced;
  for (const auto& t : inst.terminals()) {
    if (t.level() == 1) forced.push_back(t.ones().front());
  }
  const VertexCover cover = min_vertex_cover(graph, forced);

  Arborescence tree{inst.root()};
  std::vector<Node> layer;
  for (auto c : cover) {
    layer.push_back(Node::unit(inst.m(), c));
    tree.add_edge(inst.root(), layer.back());
  }
  std::sort(layer.begin(), layer.end());
  for (const auto& t : inst.terminals()) {
    if (t.level() != 2) continue;
    for (const auto& p : parents(t)) {
      if (std::binary_search(layer.begin(), layer.end(), p)) {
        tree.add_edge(p, t);
        break;
      }
    }
  }
  return tree;
}

}  // namespace msa
