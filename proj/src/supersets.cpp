#include "msa/supersets.hpp"

#include <algorithm>
#include <map>

#include "msa/error.hpp"

namespace msa {

CharacterAssignment::CharacterAssignment(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].first == pairs_[i - 1].first) {
      throw InvalidInput("character " + std::to_string(pairs_[i].first) + " assigned twice");
    }
  }
}

bool CharacterAssignment::contains(std::size_t c) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{c, false});
  return it != pairs_.end() && it->first == c;
}

CharacterAssignment CharacterAssignment::extended(std::size_t c, bool bit) const {
  auto pairs = pairs_;
  pairs.emplace_back(c, bit);
  return CharacterAssignment(std::move(pairs));
}

Node CharacterAssignment::supernode(std::size_t m) const {
  Node sn(m);
  for (auto [c, bit] : pairs_) {
    if (bit) sn.set(c);
  }
  return sn;
}

bool CharacterAssignment::matches(const Node& t) const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [&](const Pair& p) { return t.test(p.first) == p.second; });
}

std::vector<Superset> partition(std::span<const Node> terminals,
                                std::span<const std::size_t> chars) {
  if (terminals.empty()) return {};
  const std::size_t m = terminals.front().dim();
  for (auto c : chars) {
    if (c >= m) throw InvalidInput("partition: character out of range");
  }
  // Key: the terminal restricted to chars, which is also the supernode.
  std::map<Node, std::vector<Node>> groups;
  for (const auto& t : terminals) {
    Node key(m);
    for (auto c : chars) {
      if (t.test(c)) key.set(c);
    }
    groups[key].push_back(t);
  }
  std::vector<Superset> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) {
    std::vector<CharacterAssignment::Pair> pairs;
    for (auto c : chars) pairs.emplace_back(c, key.test(c));
    std::sort(members.begin(), members.end());
    out.push_back(Superset{CharacterAssignment(std::move(pairs)), key, std::move(members)});
  }
  return out;
}

std::pair<Superset, Superset> split(const Superset& ss, std::size_t c) {
  if (ss.assignment.contains(c)) {
    throw InvalidInput("split: character " + std::to_string(c) + " is already assigned");
  }
  Superset zero{ss.assignment.extended(c, false), ss.supernode, {}};
  Superset one{ss.assignment.extended(c, true), ss.supernode.with(c, true), {}};
  for (const auto& t : ss.members) (t.test(c) ? one : zero).members.push_back(t);
  if (zero.members.empty() || one.members.empty()) {
    throw InvalidInput("split: character " + std::to_string(c) + " is constant in the superset");
  }
  return {std::move(zero), std::move(one)};
}

Superset whole(std::span<const Node> terminals, std::size_t m) {
  std::vector<Node> members(terminals.begin(), terminals.end());
  std::sort(members.begin(), members.end());
  return Superset{CharacterAssignment{}, Node(m), std::move(members)};
}

}  // namespace msa
