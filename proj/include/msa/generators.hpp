#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "msa/instance.hpp"

namespace msa {

/// count distinct nodes drawn uniformly from those of level <= max_level.
/// Deterministic for a seed. Throws when fewer than count such nodes exist.
RawInstance gen_random(std::size_t m, std::size_t count, std::size_t max_level, std::uint64_t seed);

/// Undirected simple graph on vertices 1..n.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// "graph <n>" header, then one "u v" pair per line ('#' comments).
SimpleGraph parse_graph(std::istream& in);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
/// Vertex 1 joined to 2..n.
SimpleGraph star_graph(std::size_t n);

/// m = n and one level-2 terminal per edge with both endpoint bits set.
/// Rejects self-loops, repeated edges and out-of-range vertices.
RawInstance gen_from_graph(const SimpleGraph& g);

/// Conflict-free instance whose optimum is exactly m: characters are
/// attached one by one below random nodes of a growing tree, and every
/// leaf plus a random share of inner nodes becomes a terminal.
RawInstance gen_laminar(std::size_t m, std::uint64_t seed);

}  // namespace msa
