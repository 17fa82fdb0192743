#include "msa/conflict.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "msa/error.hpp"

namespace msa {

ConflictGraph::ConflictGraph(std::size_t m, std::span<const CharPair> edges)
    : m_(m), adjacency_(m) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void ConflictGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw InvalidInput("self-loop on character " + std::to_string(u));
  if (u >= m_ || v >= m_) throw InvalidInput("edge endpoint out of range");
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

std::vector<ConflictGraph::CharPair> ConflictGraph::edges() const {
  std::vector<CharPair> out;
  for (std::size_t u = 0; u < m_; ++u) {
    for (auto v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t ConflictGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

bool ConflictGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= m_ || v >= m_) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::size_t> ConflictGraph::conflicting_characters() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m_; ++c) {
    if (!adjacency_[c].empty()) out.push_back(c);
  }
  return out;
}

bool conflicts(std::span<const Node> terminals, std::size_t u, std::size_t v) {
  if (u == v) throw InvalidInput("conflicts: a character cannot conflict with itself");
  bool seen01 = false, seen10 = false, seen11 = false;
  for (const auto& t : terminals) {
    const bool a = t.test(u);
    const bool b = t.test(v);
    seen01 |= !a && b;
    seen10 |= a && !b;
    seen11 |= a && b;
    if (seen01 && seen10 && seen11) return true;
  }
  return false;
}

ConflictGraph build_cg_serial(std::span<const Node> terminals, std::size_t m) {
  ConflictGraph cg(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (conflicts(terminals, u, v)) cg.add_edge(u, v);
    }
  }
  return cg;
}

ConflictGraph build_cg(std::span<const Node> terminals, std::size_t m) {
  // Column-major bitsets: bit i of column c is terminal i's value at c.
  const std::size_t n = terminals.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> columns(m * words, 0);
  std::vector<bool> active(m, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto c : terminals[i].ones()) {
      columns[c * words + i / 64] |= std::uint64_t{1} << (i % 64);
      active[c] = true;
    }
  }

  std::vector<std::vector<std::size_t>> partners(m);
  const auto signed_m = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 8) if (m >= 64)
  for (std::int64_t su = 0; su < signed_m; ++su) {
    const auto u = static_cast<std::size_t>(su);
    if (!active[u]) continue;
    const std::uint64_t* cu = &columns[u * words];
    for (std::size_t v = u + 1; v < m; ++v) {
      if (!active[v]) continue;
      const std::uint64_t* cv = &columns[v * words];
      std::uint64_t any01 = 0, any10 = 0, any11 = 0;
      for (std::size_t w = 0; w < words; ++w) {
        any01 |= ~cu[w] & cv[w];
        any10 |= cu[w] & ~cv[w];
        any11 |= cu[w] & cv[w];
      }
      if (any01 && any10 && any11) partners[u].push_back(v);
    }
  }

  ConflictGraph cg(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (auto v : partners[u]) cg.add_edge(u, v);
  }
  return cg;
}

bool is_vertex_cover(const ConflictGraph& cg, const VertexCover& cover) {
  std::vector<bool> in(cg.m(), false);
  for (auto c : cover) {
    if (c >= cg.m()) return false;
    in[c] = true;
  }
  for (auto [u, v] : cg.edges()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

VertexCover vc_2approx(const ConflictGraph& cg) {
  std::vector<bool> matched(cg.m(), false);
  for (auto [u, v] : cg.edges()) {
    if (!matched[u] && !matched[v]) matched[u] = matched[v] = true;
  }
  VertexCover out;
  for (std::size_t c = 0; c < cg.m(); ++c) {
    if (matched[c]) out.push_back(c);
  }
  return out;
}

VertexCover make_minimal(const ConflictGraph& cg, VertexCover cover) {
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  if (!is_vertex_cover(cg, cover)) throw InvalidInput("make_minimal: input is not a vertex cover");

  std::vector<bool> in(cg.m(), false);
  for (auto c : cover) in[c] = true;
  // A member is removable iff all its neighbors are in the cover.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cg.m(); ++c) {
      if (!in[c]) continue;
      const auto& nb = cg.neighbors(c);
      if (std::all_of(nb.begin(), nb.end(), [&](std::size_t x) { return in[x]; })) {
        in[c] = false;
        changed = true;
      }
    }
  }
  VertexCover out;
  for (std::size_t c = 0; c < cg.m(); ++c) {
    if (in[c]) out.push_back(c);
  }
  return out;
}

Arborescence perfect_tree(std::size_t m, std::span<const Node> terminals) {
  std::vector<std::size_t> one_count(m, 0);
  for (const auto& t : terminals) {
    if (t.dim() != m) throw InvalidInput("perfect_tree: terminal dimension mismatch");
    for (auto c : t.ones()) ++one_count[c];
  }
  // Conflicting input shows up as a node with two parents or a character
  // flipped on two edges.
  Arborescence tree{Node(m)};
  std::map<Node, Node> parent_of;
  for (const auto& t : terminals) {
    auto chars = t.ones();
    std::sort(chars.begin(), chars.end(), [&](std::size_t a, std::size_t b) {
      if (one_count[a] != one_count[b]) return one_count[a] > one_count[b];
      return a < b;
    });
    Node cur(m);
    for (auto c : chars) {
      Node next = cur.with(c, true);
      auto [it, inserted] = parent_of.emplace(next, cur);
      if (!inserted && it->second != cur) {
        throw InvalidInput("perfect_tree: terminal set has conflicting characters");
      }
      tree.add_edge(cur, next);
      cur = std::move(next);
    }
  }
  const auto counts = tree.mutation_counts();
  if (std::any_of(counts.begin(), counts.end(), [](std::size_t k) { return k > 1; })) {
    throw InvalidInput("perfect_tree: terminal set has conflicting characters");
  }
  return tree;
}

Arborescence perfect_arborescence(const Instance& inst) {
  if (!build_cg(inst.terminals(), inst.m()).edgeless()) {
    throw InvalidInput("perfect_arborescence: conflict graph has an edge");
  }
  return perfect_tree(inst.m(), inst.terminals());
}

}  // namespace msa
