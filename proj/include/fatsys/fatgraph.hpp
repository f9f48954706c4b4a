#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fatsys {

using NodeId = int;
using HalfEdgeId = int;
using EdgeId = int;

struct Node {
  std::string name;
  int valence = 0;
};

struct HalfEdge {
  NodeId node = 0;
  int slot = 0;
};

/// One line of rotation notation: the neighbours of `node` listed in the
/// cyclic order of its incident edges.
struct RotationEntry {
  std::string node;
  std::vector<std::string> neighbours;
};

/// Decorated fat graph stored as a half-edge combinatorial map.
///
/// Construction only checks that indices are in range; the structural
/// invariants (even valence >= 4, fixed-point-free pairing, slot layout,
/// simple standard orbits) are checked by validate(), so that arbitrary
/// candidate structures can be represented and diagnosed.
///
/// Edges are the pairing orbits {h, pair(h)}; edge ids are assigned in
/// increasing order of the lower half-edge id.
class FatGraph {
 public:
  FatGraph() = default;
  FatGraph(std::vector<Node> nodes, std::vector<HalfEdge> half_edges, std::vector<HalfEdgeId> pairing,
           std::vector<std::string> circles = {});

  /// Builds from rotation notation. The k-th mention of b in a's list is
  /// paired with the k-th mention of a in b's list; for a loop at a, the
  /// mentions of a in its own list pair up consecutively (1st with 2nd, ...).
  /// Throws InvalidGraph on unknown neighbours or mismatched mention counts.
  static FatGraph from_rotations(const std::vector<RotationEntry>& rotations,
                                 std::vector<std::string> circles = {});

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<HalfEdgeId>& pairing() const { return pairing_; }
  const std::vector<std::string>& circles() const { return circles_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t half_edge_count() const { return half_edges_.size(); }
  std::size_t edge_count() const { return edge_ends_.size(); }
  std::size_t circle_count() const { return circles_.size(); }

  NodeId node_of(HalfEdgeId h) const { return half_edges_[h].node; }
  int slot_of(HalfEdgeId h) const { return half_edges_[h].slot; }
  int valence(NodeId v) const { return nodes_[v].valence; }
  HalfEdgeId partner(HalfEdgeId h) const { return pairing_[h]; }

  /// -1 when h is not part of a proper pairing orbit.
  EdgeId edge_of(HalfEdgeId h) const { return edge_of_[h]; }
  /// (lower, upper) half-edge ids of an edge.
  std::pair<HalfEdgeId, HalfEdgeId> edge_half_edges(EdgeId e) const { return edge_ends_[e]; }
  std::pair<NodeId, NodeId> edge_nodes(EdgeId e) const;
  bool is_loop(EdgeId e) const;

  /// Half-edge at (node, slot), or -1 if absent. Meaningful for graphs whose
  /// slot layout is well formed.
  HalfEdgeId at(NodeId v, int slot) const;
  /// Half-edge diametrically opposite h in its node's rotation.
  HalfEdgeId opposite(HalfEdgeId h) const;
  /// Half-edge following h in its node's rotation.
  HalfEdgeId next_in_rotation(HalfEdgeId h) const;

  std::optional<NodeId> find_node(std::string_view name) const;
  std::optional<int> find_circle(std::string_view name) const;
  /// Human-readable edge label such as "v1.0-v2.2".
  std::string edge_label(EdgeId e) const;

  /// Rotation slots of node v; entry -1 marks an empty slot.
  const std::vector<HalfEdgeId>& rotation(NodeId v) const { return rotation_[v]; }

 private:
  std::vector<Node> nodes_;
  std::vector<HalfEdge> half_edges_;
  std::vector<HalfEdgeId> pairing_;
  std::vector<std::string> circles_;

  std::vector<std::vector<HalfEdgeId>> rotation_;
  std::vector<EdgeId> edge_of_;
  std::vector<std::pair<HalfEdgeId, HalfEdgeId>> edge_ends_;
};

/// Incremental construction with half-edge ids laid out node by node,
/// slot by slot. Unconnected slots become pairing fixed points.
class FatGraphBuilder {
 public:
  NodeId add_node(std::string name, int valence);
  void connect(NodeId a, int slot_a, NodeId b, int slot_b);
  void add_circle(std::string name);
  FatGraph build() const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::pair<std::pair<NodeId, int>, std::pair<NodeId, int>>> links_;
  std::vector<std::string> circles_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  OddValence,
  ValenceTooSmall,
  ValenceMismatch,
  SlotOutOfRange,
  SlotDuplicate,
  SlotGap,
  PairingFixedPoint,
  PairingNotInvolution,
  NonSimpleOrbit,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<NodeId> node;
  std::optional<HalfEdgeId> half_edge;
  std::vector<HalfEdgeId> orbit;  // NonSimpleOrbit only
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationReport validate(const FatGraph& graph);

/// Throws InvalidGraph listing the violations if the graph is not valid.
void require_valid(const FatGraph& graph);

// ---------------------------------------------------------------------------
// Standard cycles

struct StandardCycle {
  int id = 0;
  /// Cyclic edge sequence in canonical rotation and direction.
  std::vector<EdgeId> edges;
  /// Node at which edges[i] starts; empty for a circle.
  std::vector<NodeId> nodes;
  /// Outgoing half-edge for each step, aligned with edges.
  std::vector<HalfEdgeId> darts;
  /// Circle index for circle components.
  std::optional<int> circle;

  bool is_circle() const { return circle.has_value(); }
  std::size_t length() const { return is_circle() ? 1 : edges.size(); }
};

/// Orbits of the straight-through successor, one per cycle up to reversal,
/// in canonical order, followed by the circle components. Throws
/// InvalidGraph if validate() fails.
std::vector<StandardCycle> standard_cycles(const FatGraph& graph);

// ---------------------------------------------------------------------------
// Deletion

/// Where a length variable of a derived graph came from: the concatenated
/// edges of the source, or a source circle.
struct LengthOrigin {
  std::vector<EdgeId> edges;
  std::optional<int> circle;
};

struct DeletionResult {
  FatGraph graph;
  std::vector<LengthOrigin> edge_origin;    // indexed by new edge id
  std::vector<LengthOrigin> circle_origin;  // indexed by new circle index
};

/// Removes the given standard cycles (ids as returned by standard_cycles),
/// drops emptied nodes and smooths valence-2 nodes by concatenating edges.
DeletionResult delete_standard_cycles_traced(const FatGraph& graph, const std::vector<int>& cycle_ids);

FatGraph delete_standard_cycles(const FatGraph& graph, const std::vector<int>& cycle_ids);

}  // namespace fatsys
