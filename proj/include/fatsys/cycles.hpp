#pragma once

#include "fatsys/fatgraph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fatsys {

enum class CycleKind { Standard, NonStandard };

inline constexpr std::size_t kDefaultCycleCap = 100000;

struct SimpleCycle {
  /// Sorted edge ids; empty for a circle component.
  std::vector<EdgeId> edges;
  /// Traversal: darts[i] leaves nodes[i]; the walk is closed.
  std::vector<HalfEdgeId> darts;
  std::vector<NodeId> nodes;
  std::optional<int> circle;
  CycleKind kind = CycleKind::NonStandard;

  bool is_standard() const { return kind == CycleKind::Standard; }
  std::size_t length() const { return circle ? 1 : edges.size(); }
  /// "e:3,7,9" or "circle:0".
  std::string canonical_key() const;
};

/// Every simple cycle exactly once (a cycle and its reversal coincide), in
/// canonical order: edge cycles sorted by edge set, then circle components.
/// Throws CycleCapExceeded when more than `cap` cycles exist.
///
/// Runs the anchor-edge searches in parallel with OpenMP.
std::vector<SimpleCycle> enumerate_simple_cycles(const FatGraph& graph, std::size_t cap = kDefaultCycleCap);

/// Single-threaded reference with identical output.
std::vector<SimpleCycle> enumerate_simple_cycles_serial(const FatGraph& graph, std::size_t cap = kDefaultCycleCap);

/// Throws NotACycle unless edge_set is connected and 2-regular on its support.
CycleKind classify_cycle(const FatGraph& graph, const std::vector<EdgeId>& edge_set);

/// Builds the cycle record (walk, nodes, kind) for a valid edge set.
SimpleCycle cycle_from_edges(const FatGraph& graph, std::vector<EdgeId> edge_set);

}  // namespace fatsys
