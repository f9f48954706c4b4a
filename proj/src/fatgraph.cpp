#include "fatsys/fatgraph.hpp"

#include "fatsys/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <sstream>

namespace fatsys {

FatGraph::FatGraph(std::vector<Node> nodes, std::vector<HalfEdge> half_edges, std::vector<HalfEdgeId> pairing,
                   std::vector<std::string> circles)
    : nodes_(std::move(nodes)),
      half_edges_(std::move(half_edges)),
      pairing_(std::move(pairing)),
      circles_(std::move(circles)) {
  const auto nh = static_cast<HalfEdgeId>(half_edges_.size());
  if (pairing_.size() != half_edges_.size()) {
    throw InvalidGraph("pairing size does not match half-edge count");
  }
  for (const auto& node : nodes_) {
    if (node.valence < 0) throw InvalidGraph("negative valence at node " + node.name);
  }
  for (HalfEdgeId h = 0; h < nh; ++h) {
    if (half_edges_[h].node < 0 || half_edges_[h].node >= static_cast<NodeId>(nodes_.size())) {
      throw InvalidGraph("half-edge " + std::to_string(h) + " references a missing node");
    }
    if (pairing_[h] < 0 || pairing_[h] >= nh) {
      throw InvalidGraph("half-edge " + std::to_string(h) + " is paired out of range");
    }
  }

  rotation_.resize(nodes_.size());
  for (std::size_t v = 0; v < nodes_.size(); ++v) rotation_[v].assign(nodes_[v].valence, -1);
  for (HalfEdgeId h = 0; h < nh; ++h) {
    const auto& he = half_edges_[h];
    auto& rot = rotation_[he.node];
    if (he.slot >= 0 && he.slot < static_cast<int>(rot.size()) && rot[he.slot] == -1) rot[he.slot] = h;
  }

  edge_of_.assign(half_edges_.size(), -1);
  for (HalfEdgeId h = 0; h < nh; ++h) {
    const HalfEdgeId p = pairing_[h];
    if (h < p && pairing_[p] == h) {
      edge_of_[h] = edge_of_[p] = static_cast<EdgeId>(edge_ends_.size());
      edge_ends_.emplace_back(h, p);
    }
  }
}

FatGraph FatGraph::from_rotations(const std::vector<RotationEntry>& rotations, std::vector<std::string> circles) {
  std::map<std::string, NodeId, std::less<>> index;
  std::vector<Node> nodes;
  for (const auto& entry : rotations) {
    if (index.count(entry.node)) throw InvalidGraph("node '" + entry.node + "' listed twice");
    index.emplace(entry.node, static_cast<NodeId>(nodes.size()));
    nodes.push_back({entry.node, static_cast<int>(entry.neighbours.size())});
  }

  std::vector<HalfEdge> half_edges;
  std::vector<HalfEdgeId> offset(nodes.size());
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    offset[v] = static_cast<HalfEdgeId>(half_edges.size());
    for (int s = 0; s < nodes[v].valence; ++s) half_edges.push_back({static_cast<NodeId>(v), s});
  }

  // mentions[(a, b)] = slots at a that mention b, in order.
  std::map<std::pair<NodeId, NodeId>, std::vector<int>> mentions;
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    const auto& nbrs = rotations[v].neighbours;
    for (int s = 0; s < static_cast<int>(nbrs.size()); ++s) {
      auto it = index.find(nbrs[s]);
      if (it == index.end()) {
        throw InvalidGraph("node '" + rotations[v].node + "' lists unknown neighbour '" + nbrs[s] + "'");
      }
      mentions[{static_cast<NodeId>(v), it->second}].push_back(s);
    }
  }

  std::vector<HalfEdgeId> pairing(half_edges.size(), -1);
  for (const auto& [key, slots] : mentions) {
    const auto [a, b] = key;
    if (a == b) {
      if (slots.size() % 2 != 0) {
        throw InvalidGraph("node '" + nodes[a].name + "' mentions itself an odd number of times");
      }
      for (std::size_t k = 0; k < slots.size(); k += 2) {
        pairing[offset[a] + slots[k]] = offset[a] + slots[k + 1];
        pairing[offset[a] + slots[k + 1]] = offset[a] + slots[k];
      }
      continue;
    }
    if (a > b) continue;
    auto back = mentions.find({b, a});
    const std::size_t other = back == mentions.end() ? 0 : back->second.size();
    if (other != slots.size()) {
      throw InvalidGraph("mention counts differ between '" + nodes[a].name + "' (" + std::to_string(slots.size()) +
                         ") and '" + nodes[b].name + "' (" + std::to_string(other) + ")");
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const HalfEdgeId ha = offset[a] + slots[k];
      const HalfEdgeId hb = offset[b] + back->second[k];
      pairing[ha] = hb;
      pairing[hb] = ha;
    }
  }
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(pairing.size()); ++h) {
    if (pairing[h] == -1) {
      // b mentions a but a never mentions b
      throw InvalidGraph("unmatched mention at node '" + nodes[half_edges[h].node].name + "'");
    }
  }
  return FatGraph(std::move(nodes), std::move(half_edges), std::move(pairing), std::move(circles));
}

std::pair<NodeId, NodeId> FatGraph::edge_nodes(EdgeId e) const {
  const auto [a, b] = edge_ends_[e];
  return {half_edges_[a].node, half_edges_[b].node};
}

bool FatGraph::is_loop(EdgeId e) const {
  const auto [u, v] = edge_nodes(e);
  return u == v;
}

HalfEdgeId FatGraph::at(NodeId v, int slot) const {
  const auto& rot = rotation_[v];
  if (rot.empty()) return -1;
  const int k = static_cast<int>(rot.size());
  return rot[((slot % k) + k) % k];
}

HalfEdgeId FatGraph::opposite(HalfEdgeId h) const {
  const auto& he = half_edges_[h];
  return at(he.node, he.slot + nodes_[he.node].valence / 2);
}

HalfEdgeId FatGraph::next_in_rotation(HalfEdgeId h) const {
  const auto& he = half_edges_[h];
  return at(he.node, he.slot + 1);
}

std::optional<NodeId> FatGraph::find_node(std::string_view name) const {
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].name == name) return static_cast<NodeId>(v);
  }
  return std::nullopt;
}

std::optional<int> FatGraph::find_circle(std::string_view name) const {
  for (std::size_t c = 0; c < circles_.size(); ++c) {
    if (circles_[c] == name) return static_cast<int>(c);
  }
  return std::nullopt;
}

std::string FatGraph::edge_label(EdgeId e) const {
  const auto [a, b] = edge_ends_[e];
  std::ostringstream os;
  os << nodes_[half_edges_[a].node].name << '.' << half_edges_[a].slot << '-' << nodes_[half_edges_[b].node].name
     << '.' << half_edges_[b].slot;
  return os.str();
}

// ---------------------------------------------------------------------------

NodeId FatGraphBuilder::add_node(std::string name, int valence) {
  nodes_.push_back({std::move(name), valence});
  return static_cast<NodeId>(nodes_.size() - 1);
}

void FatGraphBuilder::connect(NodeId a, int slot_a, NodeId b, int slot_b) {
  links_.push_back({{a, slot_a}, {b, slot_b}});
}

void FatGraphBuilder::add_circle(std::string name) { circles_.push_back(std::move(name)); }

FatGraph FatGraphBuilder::build() const {
  std::vector<HalfEdge> half_edges;
  std::vector<HalfEdgeId> offset(nodes_.size());
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    offset[v] = static_cast<HalfEdgeId>(half_edges.size());
    for (int s = 0; s < nodes_[v].valence; ++s) half_edges.push_back({static_cast<NodeId>(v), s});
  }
  std::vector<HalfEdgeId> pairing(half_edges.size());
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(pairing.size()); ++h) pairing[h] = h;
  auto id = [&](std::pair<NodeId, int> end) {
    const auto [v, s] = end;
    if (v < 0 || v >= static_cast<NodeId>(nodes_.size()) || s < 0 || s >= nodes_[v].valence) {
      throw InvalidGraph("builder slot out of range");
    }
    return offset[v] + s;
  };
  for (const auto& [x, y] : links_) {
    const HalfEdgeId hx = id(x);
    const HalfEdgeId hy = id(y);
    if (pairing[hx] != hx || pairing[hy] != hy) throw InvalidGraph("builder slot connected twice");
    pairing[hx] = hy;
    pairing[hy] = hx;
  }
  return FatGraph(nodes_, std::move(half_edges), std::move(pairing), circles_);
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::OddValence: return "odd valence";
    case ViolationKind::ValenceTooSmall: return "valence < 4";
    case ViolationKind::ValenceMismatch: return "valence mismatch";
    case ViolationKind::SlotOutOfRange: return "slot out of range";
    case ViolationKind::SlotDuplicate: return "slot duplicate";
    case ViolationKind::SlotGap: return "slot gap";
    case ViolationKind::PairingFixedPoint: return "pairing fixed point";
    case ViolationKind::PairingNotInvolution: return "pairing not an involution";
    case ViolationKind::NonSimpleOrbit: return "non-simple standard orbit";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

// Successor of an outgoing half-edge along the straight-through rule.
HalfEdgeId straight_successor(const FatGraph& g, HalfEdgeId h) { return g.opposite(g.partner(h)); }

std::vector<HalfEdgeId> orbit_from(const FatGraph& g, HalfEdgeId start) {
  std::vector<HalfEdgeId> orbit;
  HalfEdgeId h = start;
  do {
    orbit.push_back(h);
    h = straight_successor(g, h);
  } while (h != start);
  return orbit;
}

// One orbit per cycle-up-to-reversal, discovered in half-edge order.
std::vector<std::vector<HalfEdgeId>> straight_orbits(const FatGraph& g) {
  std::vector<std::vector<HalfEdgeId>> orbits;
  std::vector<char> seen(g.half_edge_count(), 0);
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(g.half_edge_count()); ++h) {
    if (seen[h]) continue;
    auto orbit = orbit_from(g, h);
    for (HalfEdgeId x : orbit) seen[x] = seen[g.partner(x)] = 1;
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

ValidationReport validate(const FatGraph& g) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::optional<NodeId> node, std::optional<HalfEdgeId> h, std::string msg) {
    report.violations.push_back({kind, node, h, {}, std::move(msg)});
  };

  std::vector<int> owned(g.node_count(), 0);
  std::vector<std::vector<int>> slot_use(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) slot_use[v].assign(g.valence(static_cast<NodeId>(v)), 0);
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(g.half_edge_count()); ++h) {
    const auto& he = g.half_edges()[h];
    ++owned[he.node];
    if (he.slot < 0 || he.slot >= g.valence(he.node)) {
      add(ViolationKind::SlotOutOfRange, he.node, h,
          "half-edge " + std::to_string(h) + " has slot " + std::to_string(he.slot) + " at node " +
              g.nodes()[he.node].name);
    } else {
      ++slot_use[he.node][he.slot];
    }
    const HalfEdgeId p = g.partner(h);
    if (p == h) {
      add(ViolationKind::PairingFixedPoint, he.node, h, "half-edge " + std::to_string(h) + " is paired with itself");
    } else if (g.partner(p) != h) {
      add(ViolationKind::PairingNotInvolution, he.node, h,
          "pairing of half-edge " + std::to_string(h) + " is not an involution");
    }
  }

  for (std::size_t vi = 0; vi < g.node_count(); ++vi) {
    const auto v = static_cast<NodeId>(vi);
    const auto& node = g.nodes()[v];
    if (node.valence % 2 != 0) add(ViolationKind::OddValence, v, std::nullopt, "node " + node.name + " has odd valence");
    if (node.valence < 4) {
      add(ViolationKind::ValenceTooSmall, v, std::nullopt, "node " + node.name + " has valence below 4");
    }
    if (owned[v] != node.valence) {
      add(ViolationKind::ValenceMismatch, v, std::nullopt,
          "node " + node.name + " declares valence " + std::to_string(node.valence) + " but owns " +
              std::to_string(owned[v]) + " half-edges");
    }
    for (int s = 0; s < node.valence; ++s) {
      if (slot_use[v][s] > 1) {
        add(ViolationKind::SlotDuplicate, v, std::nullopt, "node " + node.name + " slot " + std::to_string(s) + " reused");
      } else if (slot_use[v][s] == 0) {
        add(ViolationKind::SlotGap, v, std::nullopt, "node " + node.name + " slot " + std::to_string(s) + " is empty");
      }
    }
  }

  // The straight-through successor needs a well-formed map.
  if (!report.valid()) return report;

  for (auto& orbit : straight_orbits(g)) {
    std::vector<int> visits(g.node_count(), 0);
    bool simple = true;
    for (HalfEdgeId h : orbit) simple &= ++visits[g.node_of(h)] == 1;
    if (!simple) {
      Violation v{ViolationKind::NonSimpleOrbit, g.node_of(orbit.front()), orbit.front(), orbit,
                  "standard orbit through node " + g.nodes()[g.node_of(orbit.front())].name +
                      " revisits a node"};
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

void require_valid(const FatGraph& graph) {
  const auto report = validate(graph);
  if (report.valid()) return;
  std::string msg = "invalid fat graph:";
  for (const auto& v : report.violations) msg += " [" + v.message + "]";
  throw InvalidGraph(msg);
}

// ---------------------------------------------------------------------------
// Standard cycles

namespace {

StandardCycle canonical_cycle(const FatGraph& g, const std::vector<HalfEdgeId>& orbit) {
  const std::size_t k = orbit.size();
  std::vector<HalfEdgeId> reverse(k);
  for (std::size_t i = 0; i < k; ++i) reverse[i] = g.partner(orbit[k - 1 - i]);

  StandardCycle best;
  bool have = false;
  const std::vector<HalfEdgeId>* directions[] = {&orbit, &reverse};
  for (const auto* darts : directions) {
    for (std::size_t r = 0; r < k; ++r) {
      StandardCycle c;
      c.darts.reserve(k);
      for (std::size_t i = 0; i < k; ++i) c.darts.push_back((*darts)[(r + i) % k]);
      for (HalfEdgeId h : c.darts) {
        c.edges.push_back(g.edge_of(h));
        c.nodes.push_back(g.node_of(h));
      }
      if (!have || std::tie(c.edges, c.nodes, c.darts) < std::tie(best.edges, best.nodes, best.darts)) {
        best = std::move(c);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<StandardCycle> standard_cycles(const FatGraph& graph) {
  require_valid(graph);
  std::vector<StandardCycle> cycles;
  for (const auto& orbit : straight_orbits(graph)) cycles.push_back(canonical_cycle(graph, orbit));
  std::sort(cycles.begin(), cycles.end(),
            [](const StandardCycle& a, const StandardCycle& b) { return a.edges < b.edges; });
  for (std::size_t c = 0; c < graph.circle_count(); ++c) {
    StandardCycle circle;
    circle.circle = static_cast<int>(c);
    cycles.push_back(std::move(circle));
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) cycles[i].id = static_cast<int>(i);
  return cycles;
}

// ---------------------------------------------------------------------------
// Deletion

DeletionResult delete_standard_cycles_traced(const FatGraph& g, const std::vector<int>& cycle_ids) {
  const auto cycles = standard_cycles(g);
  std::set<int> doomed;
  for (int id : cycle_ids) {
    if (id < 0 || id >= static_cast<int>(cycles.size())) {
      throw UnknownCycleId("unknown standard cycle id " + std::to_string(id));
    }
    doomed.insert(id);
  }
  if (doomed.size() == cycles.size()) throw DeletingEverything();

  std::vector<char> edge_removed(g.edge_count(), 0);
  std::vector<char> circle_removed(g.circle_count(), 0);
  for (int id : doomed) {
    const auto& c = cycles[id];
    if (c.is_circle()) {
      circle_removed[*c.circle] = 1;
    } else {
      for (EdgeId e : c.edges) edge_removed[e] = 1;
    }
  }

  // Surviving half-edges per node in slot order.
  std::vector<std::vector<HalfEdgeId>> surviving(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    for (HalfEdgeId h : g.rotation(static_cast<NodeId>(v))) {
      if (!edge_removed[g.edge_of(h)]) surviving[v].push_back(h);
    }
  }
  auto smoothed = [&](NodeId v) { return surviving[v].size() == 2; };
  auto other_at = [&](HalfEdgeId h) {
    const auto& s = surviving[g.node_of(h)];
    return s[0] == h ? s[1] : s[0];
  };

  std::vector<Node> nodes;
  std::vector<HalfEdge> half_edges;
  std::vector<HalfEdgeId> new_id(g.half_edge_count(), -1);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (surviving[v].size() < 4) continue;
    const auto nv = static_cast<NodeId>(nodes.size());
    nodes.push_back({g.nodes()[v].name, static_cast<int>(surviving[v].size())});
    for (std::size_t s = 0; s < surviving[v].size(); ++s) {
      new_id[surviving[v][s]] = static_cast<HalfEdgeId>(half_edges.size());
      half_edges.push_back({nv, static_cast<int>(s)});
    }
  }

  // Follow each kept half-edge through smoothed nodes to its new partner.
  std::vector<HalfEdgeId> pairing(half_edges.size(), -1);
  std::vector<std::vector<EdgeId>> path_of(half_edges.size());
  std::vector<char> node_absorbed(g.node_count(), 0);
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(g.half_edge_count()); ++h) {
    if (new_id[h] == -1) continue;
    std::vector<EdgeId> path{g.edge_of(h)};
    HalfEdgeId x = g.partner(h);
    while (smoothed(g.node_of(x))) {
      node_absorbed[g.node_of(x)] = 1;
      const HalfEdgeId y = other_at(x);
      path.push_back(g.edge_of(y));
      x = g.partner(y);
    }
    pairing[new_id[h]] = new_id[x];
    path_of[new_id[h]] = std::move(path);
  }

  std::vector<std::string> circles;
  std::vector<LengthOrigin> circle_origin;
  for (std::size_t c = 0; c < g.circle_count(); ++c) {
    if (circle_removed[c]) continue;
    circles.push_back(g.circles()[c]);
    circle_origin.push_back({{}, static_cast<int>(c)});
  }
  // Surviving cycles made only of smoothed nodes become circles.
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (!smoothed(static_cast<NodeId>(v)) || node_absorbed[v]) continue;
    LengthOrigin origin;
    const HalfEdgeId start = surviving[v][0];
    HalfEdgeId y = start;
    do {
      origin.edges.push_back(g.edge_of(y));
      const HalfEdgeId x = g.partner(y);
      node_absorbed[g.node_of(x)] = 1;
      y = other_at(x);
    } while (y != start);
    circles.push_back("circle@" + g.nodes()[v].name);
    circle_origin.push_back(std::move(origin));
  }

  FatGraph result(std::move(nodes), std::move(half_edges), std::move(pairing), std::move(circles));
  std::vector<LengthOrigin> edge_origin(result.edge_count());
  for (EdgeId e = 0; e < static_cast<EdgeId>(result.edge_count()); ++e) {
    edge_origin[e].edges = path_of[result.edge_half_edges(e).first];
  }
  return {std::move(result), std::move(edge_origin), std::move(circle_origin)};
}

FatGraph delete_standard_cycles(const FatGraph& graph, const std::vector<int>& cycle_ids) {
  return delete_standard_cycles_traced(graph, cycle_ids).graph;
}

}  // namespace fatsys
