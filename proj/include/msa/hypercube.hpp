#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msa {

/// A vertex of the directed hypercube on m characters.
///
/// Bits are packed into 64-bit words with character 0 in the most
/// significant bit of word 0, so comparing words in order gives the same
/// result as comparing the textual form ("0110" < "1000").
class Node {
 public:
  Node() = default;
  /// The all-zero node 0^m.
  explicit Node(std::size_t m);

  /// Parses a '0'/'1' string of length m, character 0 leftmost.
  static Node parse(std::string_view bits);
  /// The level-1 node with only character c set.
  static Node unit(std::size_t m, std::size_t c);

  std::size_t dim() const { return m_; }
  bool test(std::size_t c) const;
  void set(std::size_t c, bool value = true);
  Node with(std::size_t c, bool value) const;

  std::size_t level() const;
  bool is_zero() const;
  std::string str() const;

  /// Set characters in ascending order.
  std::vector<std::size_t> ones() const;

  std::span<const std::uint64_t> words() const { return words_; }

  Node& operator&=(const Node& other);
  Node& operator|=(const Node& other);
  friend Node operator&(Node a, const Node& b) { return a &= b; }
  friend Node operator|(Node a, const Node& b) { return a |= b; }
  /// Bits of a that are not set in b.
  friend Node minus(Node a, const Node& b);

  friend bool operator==(const Node& a, const Node& b) = default;
  friend std::strong_ordering operator<=>(const Node& a, const Node& b);

  std::size_t hash() const;

 private:
  static constexpr std::size_t kWordBits = 64;
  static std::uint64_t mask_of(std::size_t c) {
    return std::uint64_t{1} << (kWordBits - 1 - c % kWordBits);
  }

  std::uint32_t m_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Ordered monotone path; consecutive nodes differ by one 0->1 flip.
using Path = std::vector<Node>;

/// A total order on character indices, listed first to last.
using CharOrder = std::vector<std::size_t>;

/// Throws InvalidInput when the two nodes have different dimensions.
void require_same_dim(const Node& a, const Node& b);

std::size_t level(const Node& n);
std::size_t hamming(const Node& u, const Node& v);

/// Bitwise AND of all members. Throws on an empty set.
Node lca(std::span<const Node> nodes);

/// Nodes obtained by clearing exactly one set bit, ascending.
std::vector<Node> parents(const Node& t);

/// True iff every set bit of a is set in d.
bool is_ancestor(const Node& a, const Node& d);

/// True iff (u, v) is an edge of the directed hypercube.
bool is_hypercube_edge(const Node& u, const Node& v);

/// Ascending character order 0, 1, ..., m-1.
CharOrder ascending_order(std::size_t m);

/// Ordered star expansion: the monotone path from anchor to target that
/// flips the differing characters in the sequence given by order.
Path ose(const Node& anchor, const Node& target, const CharOrder& order);
Path ose(const Node& anchor, const Node& target);

}  // namespace msa

template <>
struct std::hash<msa::Node> {
  std::size_t operator()(const msa::Node& n) const noexcept { return n.hash(); }
};
