#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "msa/hypercube.hpp"

namespace msa {

/// Fixed (character, bit) pairs, sorted by character, characters distinct.
class CharacterAssignment {
 public:
  using Pair = std::pair<std::size_t, bool>;

  CharacterAssignment() = default;
  explicit CharacterAssignment(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  bool contains(std::size_t c) const;
  CharacterAssignment extended(std::size_t c, bool bit) const;
  /// The minimal node consistent with the assignment.
  Node supernode(std::size_t m) const;
  bool matches(const Node& t) const;

  friend bool operator==(const CharacterAssignment&, const CharacterAssignment&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// Terminals agreeing with an assignment, with its supernode.
struct Superset {
  CharacterAssignment assignment;
  Node supernode;
  std::vector<Node> members;  // sorted
};

/// Groups terminals by their values on chars; groups are returned in
/// ascending supernode order.
std::vector<Superset> partition(std::span<const Node> terminals, std::span<const std::size_t> chars);

/// Splits on a character that takes both values among the members.
/// first is the (c, 0) child, second the (c, 1) child.
std::pair<Superset, Superset> split(const Superset& ss, std::size_t c);

/// Superset holding every terminal under the empty assignment.
Superset whole(std::span<const Node> terminals, std::size_t m);

}  // namespace msa
