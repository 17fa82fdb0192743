#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "msa/hypercube.hpp"
#include "msa/instance.hpp"

namespace msa {

/// Undirected simple graph on the character indices [0, m).
class ConflictGraph {
 public:
  using CharPair = std::pair<std::size_t, std::size_t>;

  ConflictGraph() = default;
  explicit ConflictGraph(std::size_t m) : m_(m), adjacency_(m) {}
  /// Pairs are normalized to (min, max); duplicates are ignored.
  ConflictGraph(std::size_t m, std::span<const CharPair> edges);

  void add_edge(std::size_t u, std::size_t v);

  std::size_t m() const { return m_; }
  /// Sorted (u < v) pairs.
  std::vector<CharPair> edges() const;
  std::size_t edge_count() const;
  bool edgeless() const { return edge_count() == 0; }
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t c) const { return adjacency_[c]; }
  /// Characters with at least one incident edge, ascending.
  std::vector<std::size_t> conflicting_characters() const;

  friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;  // each list sorted
};

/// Sorted member list.
using VertexCover = std::vector<std::size_t>;

/// True iff the value pairs (t[u], t[v]) over R include 01, 10 and 11.
bool conflicts(std::span<const Node> terminals, std::size_t u, std::size_t v);

/// Conflict graph of a terminal set over m characters (parallel kernel).
ConflictGraph build_cg(std::span<const Node> terminals, std::size_t m);
/// Pairwise reference built from conflicts(); same result as build_cg.
ConflictGraph build_cg_serial(std::span<const Node> terminals, std::size_t m);

bool is_vertex_cover(const ConflictGraph& cg, const VertexCover& cover);

/// Both endpoints of a maximal matching taken greedily in ascending (u, v) order.
VertexCover vc_2approx(const ConflictGraph& cg);

/// Drops members in ascending order while coverage is kept, until no
/// member can be removed. Throws if cover does not cover cg.
VertexCover make_minimal(const ConflictGraph& cg, VertexCover cover);

/// Conflict-free tree of cost m: every terminal's set characters are
/// flipped in order of decreasing 1-set size (ties by index), and those
/// monotone paths are merged at shared prefixes. Throws if two characters
/// conflict.
Arborescence perfect_tree(std::size_t m, std::span<const Node> terminals);

Arborescence perfect_arborescence(const Instance& inst);

}  // namespace msa
