#include "msa/instance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "msa/error.hpp"

namespace msa {

namespace {

void sort_unique(std::vector<Node>& nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

}  // namespace

RawInstance::RawInstance(std::size_t dim, std::vector<Node> nodes)
    : m(dim), terminals(std::move(nodes)) {
  for (const auto& t : terminals) {
    if (t.dim() != m) {
      throw InvalidInput("terminal " + t.str() + " does not have dimension " + std::to_string(m));
    }
  }
  sort_unique(terminals);
}

Node NormalizationRecord::expand(const Node& reduced) const {
  if (reduced.dim() != position_map.size()) {
    throw InvalidInput("expand: node dimension does not match the record");
  }
  Node out(original_m);
  for (auto c : dropped_one) out.set(c);
  for (std::size_t i = 0; i < position_map.size(); ++i) {
    if (reduced.test(i)) out.set(position_map[i]);
  }
  return out;
}

Node NormalizationRecord::project(const Node& original) const {
  if (original.dim() != original_m) {
    throw InvalidInput("project: node dimension does not match the record");
  }
  Node out(position_map.size());
  for (std::size_t i = 0; i < position_map.size(); ++i) {
    if (original.test(position_map[i])) out.set(i);
  }
  return out;
}

Instance Instance::from_normalized(std::size_t m, std::vector<Node> terminals) {
  RawInstance raw(m, std::move(terminals));
  Instance inst = normalize(raw);
  if (!inst.record().is_identity()) {
    throw InvalidInput("terminal set has constant characters; call normalize()");
  }
  return inst;
}

std::size_t Instance::max_level() const {
  std::size_t best = 0;
  for (const auto& t : terminals_) best = std::max(best, t.level());
  return best;
}

bool Instance::is_terminal(const Node& n) const {
  return std::binary_search(terminals_.begin(), terminals_.end(), n);
}

Instance normalize(const RawInstance& raw) {
  if (raw.terminals.empty()) throw InvalidInput("instance has no terminals");
  const std::size_t m = raw.m;
  const Node all_and = lca(raw.terminals);
  Node all_or(m);
  for (const auto& t : raw.terminals) all_or |= t;

  Instance inst;
  inst.record_.original_m = m;
  for (std::size_t c = 0; c < m; ++c) {
    if (all_and.test(c)) {
      inst.record_.dropped_one.push_back(c);
    } else if (!all_or.test(c)) {
      inst.record_.dropped_zero.push_back(c);
    } else {
      inst.record_.position_map.push_back(c);
    }
  }
  inst.m_ = inst.record_.position_map.size();
  inst.terminals_.reserve(raw.terminals.size() + 1);
  for (const auto& t : raw.terminals) inst.terminals_.push_back(inst.record_.project(t));
  inst.terminals_.push_back(Node(inst.m_));
  sort_unique(inst.terminals_);
  return inst;
}

void Arborescence::add_edge(const Node& parent, const Node& child) {
  require_same_dim(parent, child);
  require_same_dim(root_, parent);
  edges_.insert(Edge{parent, child});
}

void Arborescence::add_path(const Path& path) {
  for (std::size_t i = 1; i < path.size(); ++i) add_edge(path[i - 1], path[i]);
}

void Arborescence::merge(const Arborescence& other) {
  for (const auto& e : other.edges_) add_edge(e.parent, e.child);
}

std::set<Node> Arborescence::nodes() const {
  std::set<Node> out{root_};
  for (const auto& e : edges_) {
    out.insert(e.parent);
    out.insert(e.child);
  }
  return out;
}

std::vector<std::size_t> Arborescence::mutation_counts() const {
  std::vector<std::size_t> counts(dim(), 0);
  for (const auto& e : edges_) {
    for (auto c : minus(e.child, e.parent).ones()) ++counts[c];
  }
  return counts;
}

std::vector<std::size_t> Arborescence::bad_characters() const {
  std::vector<std::size_t> out;
  const auto counts = mutation_counts();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] >= 2) out.push_back(c);
  }
  return out;
}

std::size_t Arborescence::steiner_count(const Instance& inst) const {
  std::size_t count = 0;
  for (const auto& n : nodes()) {
    if (!inst.is_terminal(n)) ++count;
  }
  return count;
}

std::int64_t Arborescence::penalty(const Instance& inst) const {
  return static_cast<std::int64_t>(cost()) - static_cast<std::int64_t>(inst.m());
}

std::string ValidationReport::str() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << '\n';
    os << violations[i];
  }
  return os.str();
}

Arborescence lift(const Arborescence& reduced, const NormalizationRecord& record) {
  if (reduced.dim() != record.reduced_m()) {
    throw InvalidInput("lift: tree dimension " + std::to_string(reduced.dim()) +
                       " does not match reduced dimension " + std::to_string(record.reduced_m()));
  }
  Arborescence out{Node(record.original_m)};
  Node cur(record.original_m);
  for (auto c : record.dropped_one) {
    Node next = cur.with(c, true);
    out.add_edge(cur, next);
    cur = std::move(next);
  }
  for (const auto& e : reduced.edges()) {
    out.add_edge(record.expand(e.parent), record.expand(e.child));
  }
  return out;
}

ValidationReport validate(std::size_t m, const std::vector<Node>& terminals,
                          const Arborescence& arb) {
  ValidationReport report;
  auto& v = report.violations;
  if (arb.dim() != m) {
    v.push_back("dimension mismatch: tree has " + std::to_string(arb.dim()) + ", instance has " +
                std::to_string(m));
    return report;
  }
  if (!arb.root().is_zero()) v.push_back("root " + arb.root().str() + " is not 0^m");

  std::map<Node, std::vector<Node>> children;
  std::map<Node, std::size_t> in_degree;
  for (const auto& e : arb.edges()) {
    if (!is_hypercube_edge(e.parent, e.child)) {
      v.push_back("non-unit edge " + e.parent.str() + "->" + e.child.str());
    }
    ++in_degree[e.child];
    children[e.parent].push_back(e.child);
  }
  if (in_degree.count(arb.root())) v.push_back("root " + arb.root().str() + " has an in-edge");
  for (const auto& [node, deg] : in_degree) {
    if (deg > 1) v.push_back("multiple in-edges at " + node.str());
  }

  std::set<Node> reached{arb.root()};
  std::vector<Node> stack{arb.root()};
  while (!stack.empty()) {
    Node u = std::move(stack.back());
    stack.pop_back();
    auto it = children.find(u);
    if (it == children.end()) continue;
    for (const auto& c : it->second) {
      if (reached.insert(c).second) stack.push_back(c);
    }
  }
  for (const auto& n : arb.nodes()) {
    if (!reached.count(n)) v.push_back("unreachable node " + n.str());
  }
  for (const auto& t : terminals) {
    if (t.dim() != m) {
      v.push_back("terminal " + t.str() + " has wrong dimension");
    } else if (!reached.count(t)) {
      v.push_back("uncovered terminal " + t.str());
    }
  }
  return report;
}

ValidationReport validate(const Instance& inst, const Arborescence& arb) {
  return validate(inst.m(), inst.terminals(), arb);
}

std::size_t lower_bound(const Instance& inst) {
  return std::max(inst.terminals().size() - 1, inst.m());
}

std::size_t mvc_lower_bound(const Instance& inst, std::size_t mvc_size) {
  return inst.m() + mvc_size;
}

}  // namespace msa
