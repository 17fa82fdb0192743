#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msa/conflict.hpp"
#include "msa/instance.hpp"

namespace msa {

/// A family of node sets; a hitting set meets every member.
struct HittingInstance {
  std::vector<std::vector<Node>> family;
};

/// One set per target: its parents.
HittingInstance parent_family(std::span<const Node> targets);

enum class HsStrategy { kGreedy, kTakeAll, kBestOfBoth };

/// kGreedy picks the element hitting most uncovered sets (ties: smallest
/// node); kTakeAll adds every element of the first uncovered set;
/// kBestOfBoth runs both and keeps the smaller (ties: greedy).
/// The result is sorted.
std::vector<Node> hitting_set(const HittingInstance& hi, HsStrategy strategy);

bool hits_all(const HittingInstance& hi, std::span<const Node> chosen);

struct LevelSlice {
  std::size_t k = 0;
  std::vector<Node> terminals;
  /// layers[i] is the Steiner layer at level i + 1, for i < k - 1.
  std::vector<std::vector<Node>> layers;
  Arborescence tree;
};

/// Layered tree for terminals that all sit on level k >= 2: each layer
/// hits the parents of the layer above it, every node takes its smallest
/// parent in the layer below, and level-1 nodes hang from 0^m.
LevelSlice build_level_slice(std::size_t m, std::span<const Node> level_k,
                             HsStrategy strategy = HsStrategy::kBestOfBoth);
Arborescence solve_level_slice(std::size_t m, std::span<const Node> level_k,
                               HsStrategy strategy = HsStrategy::kBestOfBoth);

struct MhsOptions {
  HsStrategy strategy = HsStrategy::kBestOfBoth;
  /// Return perfect_arborescence when no characters conflict. The layered
  /// construction alone can pay extra on such instances.
  bool conflict_free_shortcut = true;
};

/// Terminal-parent sweep in descending level, one level slice per
/// remaining level, union with collisions resolved in favour of sweep
/// edges then lower slices, and non-terminal leaves pruned.
Arborescence solve_mhs(const Instance& inst, const MhsOptions& options = {});

/// Cover-based approximation: a minimal 2-approximate vertex cover of
/// the conflict graph is cleared from every terminal, the conflict-free
/// remainder gets a perfect tree, and each terminal is reached from its
/// cleared copy along an ascending path.
Arborescence solve_mvc(const Instance& inst, VertexCover* cover = nullptr);

}  // namespace msa
