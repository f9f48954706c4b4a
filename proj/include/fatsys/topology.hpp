#pragma once

#include "fatsys/cycles.hpp"
#include "fatsys/fatgraph.hpp"
#include "fatsys/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fatsys {

/// Intersection graph of the standard cycles with its induced rotation
/// system. Vertex i is standard cycle i; ribbon edge k is the crossing at
/// source node source_node[k]. Dart 2k+s sits at vertex ends[k][s].
struct RibbonGraph {
  std::size_t vertex_count = 0;
  std::vector<std::array<int, 2>> ends;
  std::vector<NodeId> source_node;
  /// Cyclic dart order at each vertex.
  std::vector<std::vector<int>> rotation;
  /// Vertices whose rotation was reversed relative to the canonical
  /// traversal direction of their cycle.
  std::vector<char> reflected;

  std::size_t edge_count() const { return ends.size(); }
  int vertex_of(int dart) const { return ends[dart / 2][dart % 2]; }
};

/// Requires every node to be 4-valent; throws NotFourRegular otherwise.
RibbonGraph intersection_graph(const FatGraph& graph);

/// The same ribbon graph with the rotation reversed at every vertex whose
/// flag is set.
RibbonGraph reflect(const RibbonGraph& ribbon, const std::vector<char>& reflected);

struct ComponentTopology {
  std::vector<int> vertices;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler_characteristic = 0;
  long genus = 0;
};

struct FaceTrace {
  /// Dart orbits of the face permutation; an isolated vertex contributes
  /// one face with no darts.
  std::vector<std::vector<int>> faces;
  std::vector<ComponentTopology> components;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  long euler_characteristic = 0;  // v - e + f
  long genus = 0;                 // summed over components

  bool connected() const { return components.size() <= 1; }
};

FaceTrace trace_faces(const RibbonGraph& ribbon);

/// Searches per-vertex reflections (vertices of degree >= 3; the global
/// reversal is fixed) for a genus-0 rotation. Gives up and returns nothing
/// when more than `max_free_vertices` vertices would need a choice.
std::optional<RibbonGraph> find_planar_orientation(const RibbonGraph& ribbon, std::size_t max_free_vertices = 20);

/// Closed walk in the source graph associated with one ribbon face.
struct FaceCycle {
  std::size_t face = 0;
  std::vector<HalfEdgeId> darts;
  std::vector<EdgeId> edges;  // walk order
  std::vector<NodeId> nodes;
  bool simple = true;
  std::optional<CycleKind> kind;  // set when simple
};

/// One closed walk per face that has darts; the walks partition the
/// source edges. Uses the given ribbon orientation.
std::vector<FaceCycle> face_nonstandard_cycles(const FatGraph& graph, const RibbonGraph& ribbon);
std::vector<FaceCycle> face_nonstandard_cycles(const FatGraph& graph);

struct ObstructionCertificate {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t f = 0;
  std::vector<FaceCycle> face_cycles;
  std::vector<int> reflected_vertices;
  /// f * mu = v * lambda with lambda = 1.
  Rational lambda{1};
  Rational mu;
};

/// Certificate when the intersection graph has an edge, is connected, admits a genus-0
/// orientation and has v <= f; nothing otherwise (inconclusive).
std::optional<ObstructionCertificate> vf_obstruction(const FatGraph& graph);

struct RibbonGenus {
  std::size_t boundary_count = 0;
  long genus = 0;
  long chi = 0;  // V - E of the fat graph
  std::size_t components = 0;
};

/// Boundary walks of the thickened fat graph and the genus of the closed
/// surface obtained by capping them with discs.
RibbonGenus ribbon_genus(const FatGraph& graph);

struct MinGenusReport {
  RibbonGenus genus;
  /// Smallest genus of a connected closed surface carrying the graph as its
  /// systolic graph: chi(F) <= chi(graph) + boundary_count.
  long min_genus = 0;
  std::string statement;
};

MinGenusReport min_genus_report(const FatGraph& graph);

}  // namespace fatsys
