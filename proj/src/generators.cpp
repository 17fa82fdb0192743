#include "msa/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "msa/error.hpp"

namespace msa {

namespace {

constexpr std::size_t kEnumerateUpTo = 20;

long double log_choose(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
         std::lgamma(static_cast<long double>(n - k) + 1);
}

Node node_of_code(std::size_t m, std::uint64_t code) {
  Node n(m);
  for (std::size_t c = 0; c < m; ++c) {
    if (code >> c & 1) n.set(c);
  }
  return n;
}

std::vector<Node> sample_enumerated(std::size_t m, std::size_t count, std::size_t max_level,
                                    std::mt19937_64& rng) {
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    if (static_cast<std::size_t>(std::popcount(code)) <= max_level) codes.push_back(code);
  }
  if (count > codes.size()) {
    throw InvalidInput("only " + std::to_string(codes.size()) + " nodes of level <= " +
                       std::to_string(max_level) + " exist for m = " + std::to_string(m));
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, codes.size() - 1);
    std::swap(codes[i], codes[pick(rng)]);
  }
  std::vector<Node> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(node_of_code(m, codes[i]));
  return out;
}

std::vector<Node> sample_by_level(std::size_t m, std::size_t count, std::size_t max_level,
                                  std::mt19937_64& rng) {
  // Level k carries weight C(m, k); scaled in log space to stay finite.
  std::vector<long double> logw(max_level + 1);
  for (std::size_t k = 0; k <= max_level; ++k) logw[k] = log_choose(m, k);
  const long double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> weights;
  long double log_total = 0;
  for (auto lw : logw) {
    weights.push_back(static_cast<double>(std::exp(lw - top)));
    log_total += std::exp(lw - top);
  }
  log_total = top + std::log(log_total);
  if (std::log(static_cast<long double>(count)) > log_total + 1e-9L) {
    throw InvalidInput("not enough nodes of level <= " + std::to_string(max_level));
  }

  std::discrete_distribution<std::size_t> level(weights.begin(), weights.end());
  std::vector<std::size_t> chars(m);
  std::iota(chars.begin(), chars.end(), std::size_t{0});
  std::set<Node> seen;
  while (seen.size() < count) {
    const std::size_t k = level(rng);
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, m - 1);
      std::swap(chars[i], chars[pick(rng)]);
    }
    Node n(m);
    for (std::size_t i = 0; i < k; ++i) n.set(chars[i]);
    seen.insert(std::move(n));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

RawInstance gen_random(std::size_t m, std::size_t count, std::size_t max_level, std::uint64_t seed) {
  if (count == 0) throw InvalidInput("at least one terminal is required");
  max_level = std::min(max_level, m);
  std::mt19937_64 rng(seed);
  auto nodes = m <= kEnumerateUpTo ? sample_enumerated(m, count, max_level, rng)
                                   : sample_by_level(m, count, max_level, rng);
  return RawInstance(m, std::move(nodes));
}

SimpleGraph parse_graph(std::istream& in) {
  SimpleGraph g;
  std::string line;
  bool header = false;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    auto fail = [&] { throw InvalidInput("line " + std::to_string(number) + ": cannot parse \"" + line + "\""); };
    std::string extra;
    if (!header) {
      std::string word;
      long long n = -1;
      if (!(words >> word >> n) || word != "graph" || n < 0 || (words >> extra)) fail();
      g.n = static_cast<std::size_t>(n);
      header = true;
      continue;
    }
    long long u = 0, v = 0;
    if (!(words >> u >> v) || (words >> extra) || u < 1 || v < 1) fail();
    g.edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (!header) throw InvalidInput("missing \"graph <n>\" header");
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g{n, {}};
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g{n, {}};
  for (std::size_t u = 1; u < n; ++u) g.edges.emplace_back(u, u + 1);
  return g;
}

SimpleGraph star_graph(std::size_t n) {
  SimpleGraph g{n, {}};
  for (std::size_t v = 2; v <= n; ++v) g.edges.emplace_back(1, v);
  return g;
}

RawInstance gen_from_graph(const SimpleGraph& g) {
  if (g.edges.empty()) throw InvalidInput("graph has no edges");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<Node> terminals;
  for (auto [u, v] : g.edges) {
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > g.n || v > g.n) {
      throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) + " leaves 1.." +
                         std::to_string(g.n));
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw InvalidInput("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    Node t(g.n);
    t.set(u - 1);
    t.set(v - 1);
    terminals.push_back(std::move(t));
  }
  return RawInstance(g.n, std::move(terminals));
}

RawInstance gen_laminar(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> chars(m);
  std::iota(chars.begin(), chars.end(), std::size_t{0});
  std::shuffle(chars.begin(), chars.end(), rng);

  std::vector<Node> nodes{Node(m)};
  std::vector<bool> inner{false};
  for (auto c : chars) {
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    const std::size_t parent = pick(rng);
    inner[parent] = true;
    nodes.push_back(nodes[parent].with(c, true));
    inner.push_back(false);
  }
  std::bernoulli_distribution keep_inner(0.3);
  std::vector<Node> terminals{Node(m)};
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!inner[i] || keep_inner(rng)) terminals.push_back(nodes[i]);
  }
  return RawInstance(m, std::move(terminals));
}

}  // namespace msa
