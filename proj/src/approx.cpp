#include "msa/approx.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "msa/error.hpp"

namespace msa {

namespace {

bool hits(const std::vector<Node>& set, std::span<const Node> chosen) {
  return std::any_of(set.begin(), set.end(), [&](const Node& x) {
    return std::binary_search(chosen.begin(), chosen.end(), x);
  });
}

std::vector<Node> greedy_hs(const HittingInstance& hi) {
  std::vector<Node> universe;
  for (const auto& set : hi.family) universe.insert(universe.end(), set.begin(), set.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  std::vector<bool> covered(hi.family.size(), false);
  std::size_t remaining = hi.family.size();
  std::vector<Node> chosen;
  while (remaining > 0) {
    std::size_t best = 0, best_hits = 0;
    for (std::size_t u = 0; u < universe.size(); ++u) {
      std::size_t h = 0;
      for (std::size_t s = 0; s < hi.family.size(); ++s) {
        if (!covered[s] && std::find(hi.family[s].begin(), hi.family[s].end(), universe[u]) !=
                               hi.family[s].end()) {
          ++h;
        }
      }
      if (h > best_hits) best = u, best_hits = h;
    }
    const Node& pick = universe[best];
    chosen.push_back(pick);
    for (std::size_t s = 0; s < hi.family.size(); ++s) {
      if (!covered[s] &&
          std::find(hi.family[s].begin(), hi.family[s].end(), pick) != hi.family[s].end()) {
        covered[s] = true;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<Node> take_all_hs(const HittingInstance& hi) {
  std::vector<Node> chosen;
  for (const auto& set : hi.family) {
    if (hits(set, chosen)) continue;
    chosen.insert(chosen.end(), set.begin(), set.end());
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  }
  return chosen;
}

// Smallest member of below that is a parent of v.
const Node& smallest_parent(const Node& v, const std::vector<Node>& below) {
  for (const auto& p : below) {
    if (is_hypercube_edge(p, v)) return p;
  }
  throw std::logic_error("layer does not hit the parents of " + v.str());
}

void prune_leaves(Arborescence& tree, const Instance& inst) {
  for (;;) {
    std::set<Node> has_child;
    for (const auto& e : tree.edges()) has_child.insert(e.parent);
    Arborescence kept(tree.root());
    bool dropped = false;
    for (const auto& e : tree.edges()) {
      if (!has_child.contains(e.child) && !inst.is_terminal(e.child)) {
        dropped = true;
        continue;
      }
      kept.add_edge(e.parent, e.child);
    }
    tree = std::move(kept);
    if (!dropped) return;
  }
}

}  // namespace

HittingInstance parent_family(std::span<const Node> targets) {
  HittingInstance hi;
  hi.family.reserve(targets.size());
  for (const auto& t : targets) hi.family.push_back(parents(t));
  return hi;
}

bool hits_all(const HittingInstance& hi, std::span<const Node> chosen) {
  std::vector<Node> sorted(chosen.begin(), chosen.end());
  std::sort(sorted.begin(), sorted.end());
  return std::all_of(hi.family.begin(), hi.family.end(),
                     [&](const auto& set) { return hits(set, sorted); });
}

std::vector<Node> hitting_set(const HittingInstance& hi, HsStrategy strategy) {
  if (hi.family.empty()) throw InvalidInput("hitting set: empty family");
  for (const auto& set : hi.family) {
    if (set.empty()) throw InvalidInput("hitting set: family contains an empty set");
  }
  switch (strategy) {
    case HsStrategy::kGreedy:
      return greedy_hs(hi);
    case HsStrategy::kTakeAll:
      return take_all_hs(hi);
    case HsStrategy::kBestOfBoth: {
      auto g = greedy_hs(hi);
      auto t = take_all_hs(hi);
      return t.size() < g.size() ? t : g;
    }
  }
  throw std::logic_error("unknown hitting set strategy");
}

LevelSlice build_level_slice(std::size_t m, std::span<const Node> level_k, HsStrategy strategy) {
  if (level_k.empty()) throw InvalidInput("level slice: no terminals");
  LevelSlice slice;
  slice.k = level_k.front().level();
  if (slice.k < 2) throw InvalidInput("level slice: terminals must sit on level 2 or higher");
  for (const auto& t : level_k) {
    if (t.dim() != m) throw InvalidInput("level slice: dimension mismatch");
    if (t.level() != slice.k) throw InvalidInput("level slice: terminals on different levels");
  }
  slice.terminals.assign(level_k.begin(), level_k.end());
  std::sort(slice.terminals.begin(), slice.terminals.end());
  slice.terminals.erase(std::unique(slice.terminals.begin(), slice.terminals.end()),
                        slice.terminals.end());

  slice.layers.resize(slice.k - 1);
  slice.tree = Arborescence(Node(m));
  const std::vector<Node>* above = &slice.terminals;
  for (std::size_t i = slice.k - 1; i >= 1; --i) {
    auto family = parent_family(*above);
    auto& layer = slice.layers[i - 1];
    layer = hitting_set(family, strategy);
    if (!hits_all(family, layer)) throw std::logic_error("level slice layer misses a parent set");
    for (const auto& v : *above) slice.tree.add_edge(smallest_parent(v, layer), v);
    above = &layer;
  }
  for (const auto& v : slice.layers.front()) slice.tree.add_edge(Node(m), v);
  return slice;
}

Arborescence solve_level_slice(std::size_t m, std::span<const Node> level_k, HsStrategy strategy) {
  return build_level_slice(m, level_k, strategy).tree;
}

Arborescence solve_mhs(const Instance& inst, const MhsOptions& options) {
  const std::size_t m = inst.m();
  if (options.conflict_free_shortcut && build_cg(inst.terminals(), m).edgeless()) {
    return perfect_arborescence(inst);
  }

  std::vector<Node> order;
  for (const auto& t : inst.terminals()) {
    if (!t.is_zero()) order.push_back(t);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Node& a, const Node& b) { return a.level() > b.level(); });

  // child -> parent; first writer wins, so insertion order is priority.
  std::map<Node, Node> parent_of;
  std::map<std::size_t, std::vector<Node>> survivors;
  for (const auto& t : order) {
    bool attached = false;
    for (const auto& p : parents(t)) {
      if (inst.is_terminal(p)) {
        parent_of.emplace(t, p);
        attached = true;
        break;
      }
    }
    if (!attached) survivors[t.level()].push_back(t);
  }
  // Level-1 terminals always find the root in the sweep.
  for (const auto& [k, level_k] : survivors) {
    auto slice = solve_level_slice(m, level_k, options.strategy);
    for (const auto& e : slice.edges()) parent_of.emplace(e.child, e.parent);
  }

  Arborescence tree(inst.root());
  for (const auto& [child, parent] : parent_of) tree.add_edge(parent, child);
  prune_leaves(tree, inst);
  return tree;
}

Arborescence solve_mvc(const Instance& inst, VertexCover* cover) {
  const std::size_t m = inst.m();
  ConflictGraph cg = build_cg(inst.terminals(), m);
  VertexCover vc = make_minimal(cg, vc_2approx(cg));
  Node mask(m);
  for (auto c : vc) mask.set(c);

  std::vector<Node> projected;
  projected.reserve(inst.terminals().size());
  for (const auto& t : inst.terminals()) projected.push_back(minus(t, mask));
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

  Arborescence tree = perfect_tree(m, projected);
  for (const auto& t : inst.terminals()) tree.add_path(ose(minus(t, mask), t));
  if (cover) *cover = std::move(vc);
  return tree;
}

}  // namespace msa
