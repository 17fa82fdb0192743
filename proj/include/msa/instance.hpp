#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "msa/hypercube.hpp"

namespace msa {

/// Terminal set as read from input: any nodes of a common dimension.
/// Duplicates are collapsed on construction.
struct RawInstance {
  RawInstance() = default;
  RawInstance(std::size_t m, std::vector<Node> terminals);

  std::size_t m = 0;
  std::vector<Node> terminals;  // sorted, distinct
};

/// How a reduced instance maps back to the original characters.
struct NormalizationRecord {
  std::size_t original_m = 0;
  std::vector<std::size_t> dropped_zero;  // constant 0 over all raw terminals
  std::vector<std::size_t> dropped_one;   // constant 1 over all raw terminals
  std::vector<std::size_t> position_map;  // reduced index -> original index

  bool is_identity() const { return dropped_zero.empty() && dropped_one.empty(); }
  std::size_t reduced_m() const { return position_map.size(); }

  /// Embeds a reduced node into the original dimension, dropped-one bits set.
  Node expand(const Node& reduced) const;
  /// Restricts an original node to the kept characters.
  Node project(const Node& original) const;

  friend bool operator==(const NormalizationRecord&, const NormalizationRecord&) = default;
};

/// A normalized instance: every character varies over the terminals and
/// 0^m is a terminal. Only constructible through normalize() or
/// from_normalized(), which checks the invariants.
class Instance {
 public:
  static Instance from_normalized(std::size_t m, std::vector<Node> terminals);

  std::size_t m() const { return m_; }
  const std::vector<Node>& terminals() const { return terminals_; }
  const NormalizationRecord& record() const { return record_; }
  Node root() const { return Node(m_); }
  /// Every character was constant; the solution is the lone root.
  bool trivial() const { return m_ == 0; }
  /// Largest terminal level.
  std::size_t max_level() const;
  bool is_terminal(const Node& n) const;

  RawInstance as_raw() const { return RawInstance(m_, terminals_); }

 private:
  friend Instance normalize(const RawInstance& raw);
  Instance() = default;

  std::size_t m_ = 0;
  std::vector<Node> terminals_;  // sorted, contains 0^m
  NormalizationRecord record_;
};

struct Edge {
  Node parent;
  Node child;
  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of hypercube edges plus a designated root. The structure does
/// not enforce tree shape; validate() reports what is wrong with it.
class Arborescence {
 public:
  Arborescence() = default;
  explicit Arborescence(Node root) : root_(std::move(root)) {}

  void add_edge(const Node& parent, const Node& child);
  void add_path(const Path& path);
  void merge(const Arborescence& other);

  const Node& root() const { return root_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::set<Node> nodes() const;
  std::size_t dim() const { return root_.dim(); }
  std::size_t cost() const { return edges_.size(); }

  /// Number of edges flipping each character.
  std::vector<std::size_t> mutation_counts() const;
  /// Characters flipped on two or more edges.
  std::vector<std::size_t> bad_characters() const;

  /// Tree nodes that are not terminals of inst.
  std::size_t steiner_count(const Instance& inst) const;
  /// cost - m (may be negative for an invalid tree).
  std::int64_t penalty(const Instance& inst) const;

  friend bool operator==(const Arborescence&, const Arborescence&) = default;

 private:
  Node root_;
  std::set<Edge> edges_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

Instance normalize(const RawInstance& raw);

/// Maps a tree over the reduced characters back to the original ones:
/// a chain through the dropped-one characters (ascending) from 0^m, then
/// the reduced tree grafted below with every node OR-ed with that mask.
Arborescence lift(const Arborescence& reduced, const NormalizationRecord& record);

ValidationReport validate(const Instance& inst, const Arborescence& arb);
/// Same checks against an arbitrary terminal set of the tree's dimension.
ValidationReport validate(std::size_t m, const std::vector<Node>& terminals,
                          const Arborescence& arb);

/// max(|R| - 1, m).
std::size_t lower_bound(const Instance& inst);
/// m + |MVC(CG(R))|, given the exact cover size.
std::size_t mvc_lower_bound(const Instance& inst, std::size_t mvc_size);

}  // namespace msa
