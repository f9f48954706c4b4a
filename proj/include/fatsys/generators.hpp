#pragma once

#include "fatsys/fatgraph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fatsys {

/// Undirected multigraph without rotation data.
struct PlainGraph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;

  std::size_t vertex_count() const { return names.size(); }
  std::vector<int> degrees() const;
  int add_vertex(std::string name);
  void add_edge(int a, int b) { edges.emplace_back(a, b); }
};

/// G_n: a hub cycle through p_1..p_n and n triangles; triangle i crosses
/// the hub at p_i and meets its ring neighbours at w_{i-1} and w_i.
FatGraph gen_wheel_family(int n);

/// The 8-node, 16-edge example with the printed rotations.
FatGraph gen_example_g8();
std::vector<RotationEntry> example_g8_rotations();

/// Trivalent graph with 2(n0^2 - 3n0) vertices: a base cycle v_1..v_m,
/// pendant edges (v_j, u_j), and for each residue class i mod (n0 - 3) a
/// chord cycle among the u's with stride n0 - 3.
PlainGraph gen_trivalent_girth(int n0);

/// Trivalent graph with its least edge (x, y) replaced by a hub u joined
/// to x, y and a new leaf.
PlainGraph gen_unitrivalent_girth(int n0);

/// 2(n0^2 - 3n0 + 1); the vertex count of gen_unitrivalent_girth(n0).
std::size_t unitrivalent_vertex_count(int n0);

/// Shortest cycle length by breadth-first search from every vertex (loops
/// count 1, parallel edges 2); nullopt for forests. Roots run in parallel.
std::optional<std::size_t> girth(const PlainGraph& graph);

/// Single-threaded reference with identical result.
std::optional<std::size_t> girth_serial(const PlainGraph& graph);

}  // namespace fatsys
