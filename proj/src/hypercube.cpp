#include "msa/hypercube.hpp"

#include <algorithm>
#include <bit>

#include "msa/error.hpp"

namespace msa {

Node::Node(std::size_t m)
    : m_(static_cast<std::uint32_t>(m)), words_((m + kWordBits - 1) / kWordBits, 0) {}

Node Node::parse(std::string_view bits) {
  Node n(bits.size());
  for (std::size_t c = 0; c < bits.size(); ++c) {
    if (bits[c] == '1') {
      n.set(c);
    } else if (bits[c] != '0') {
      throw InvalidInput("node string may contain only '0' and '1': '" + std::string(bits) + "'");
    }
  }
  return n;
}

Node Node::unit(std::size_t m, std::size_t c) {
  Node n(m);
  n.set(c);
  return n;
}

bool Node::test(std::size_t c) const { return (words_[c / kWordBits] & mask_of(c)) != 0; }

void Node::set(std::size_t c, bool value) {
  if (c >= m_) throw InvalidInput("character index out of range");
  if (value) {
    words_[c / kWordBits] |= mask_of(c);
  } else {
    words_[c / kWordBits] &= ~mask_of(c);
  }
}

Node Node::with(std::size_t c, bool value) const {
  Node copy = *this;
  copy.set(c, value);
  return copy;
}

std::size_t Node::level() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Node::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::string Node::str() const {
  std::string s(m_, '0');
  for (std::size_t c = 0; c < m_; ++c) {
    if (test(c)) s[c] = '1';
  }
  return s;
}

std::vector<std::size_t> Node::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      const auto lead = static_cast<std::size_t>(std::countl_zero(bits));
      out.push_back(w * kWordBits + lead);
      bits &= ~(std::uint64_t{1} << (kWordBits - 1 - lead));
    }
  }
  return out;
}

Node& Node::operator&=(const Node& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Node& Node::operator|=(const Node& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Node minus(Node a, const Node& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= ~b.words_[i];
  return a;
}

std::strong_ordering operator<=>(const Node& a, const Node& b) {
  if (a.m_ != b.m_) return a.m_ <=> b.m_;
  return a.words_ <=> b.words_;
}

std::size_t Node::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void require_same_dim(const Node& a, const Node& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim()));
  }
}

std::size_t level(const Node& n) { return n.level(); }

std::size_t hamming(const Node& u, const Node& v) {
  require_same_dim(u, v);
  std::size_t total = 0;
  auto uw = u.words();
  auto vw = v.words();
  for (std::size_t i = 0; i < uw.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(uw[i] ^ vw[i]));
  }
  return total;
}

Node lca(std::span<const Node> nodes) {
  if (nodes.empty()) throw InvalidInput("lca of an empty set");
  Node acc = nodes.front();
  for (const auto& n : nodes.subspan(1)) acc &= n;
  return acc;
}

std::vector<Node> parents(const Node& t) {
  std::vector<Node> out;
  for (auto c : t.ones()) out.push_back(t.with(c, false));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ancestor(const Node& a, const Node& d) {
  require_same_dim(a, d);
  auto aw = a.words();
  auto dw = d.words();
  for (std::size_t i = 0; i < aw.size(); ++i) {
    if ((aw[i] & ~dw[i]) != 0) return false;
  }
  return true;
}

bool is_hypercube_edge(const Node& u, const Node& v) {
  return u.dim() == v.dim() && is_ancestor(u, v) && hamming(u, v) == 1;
}

CharOrder ascending_order(std::size_t m) {
  CharOrder order(m);
  for (std::size_t c = 0; c < m; ++c) order[c] = c;
  return order;
}

Path ose(const Node& anchor, const Node& target, const CharOrder& order) {
  if (!is_ancestor(anchor, target)) {
    throw InvalidInput("ose: " + anchor.str() + " is not an ancestor of " + target.str());
  }
  const Node diff = minus(target, anchor);
  Path path{anchor};
  Node cur = anchor;
  std::size_t flipped = 0;
  const std::size_t needed = diff.level();
  for (auto c : order) {
    if (flipped == needed) break;
    if (c < diff.dim() && diff.test(c) && !cur.test(c)) {
      cur.set(c);
      path.push_back(cur);
      ++flipped;
    }
  }
  if (flipped != needed) throw InvalidInput("ose: order does not list every differing character");
  return path;
}

Path ose(const Node& anchor, const Node& target) {
  return ose(anchor, target, ascending_order(anchor.dim()));
}

}  // namespace msa
