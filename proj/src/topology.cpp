#include "fatsys/topology.hpp"

#include "fatsys/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace fatsys {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void require_four_regular(const FatGraph& graph) {
  require_valid(graph);
  for (const auto& node : graph.nodes()) {
    if (node.valence != 4) {
      throw NotFourRegular("node " + node.name + " has valence " + std::to_string(node.valence) + "; expected 4");
    }
  }
}

// Next dart after d in the rotation at its vertex.
std::vector<int> successor_table(const RibbonGraph& r) {
  std::vector<int> next(2 * r.edge_count(), -1);
  for (const auto& rot : r.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) next[rot[i]] = rot[(i + 1) % rot.size()];
  }
  return next;
}

}  // namespace

RibbonGraph intersection_graph(const FatGraph& graph) {
  require_four_regular(graph);
  const auto cycles = standard_cycles(graph);

  RibbonGraph r;
  r.vertex_count = cycles.size();
  r.ends.assign(graph.node_count(), {-1, -1});
  r.source_node.resize(graph.node_count());
  std::iota(r.source_node.begin(), r.source_node.end(), 0);
  r.rotation.resize(cycles.size());
  r.reflected.assign(cycles.size(), 0);

  for (const auto& c : cycles) {
    for (NodeId v : c.nodes) {
      auto& ends = r.ends[v];
      const int side = ends[0] == -1 ? 0 : 1;
      ends[side] = c.id;
      r.rotation[c.id].push_back(2 * v + side);
    }
  }
  return r;
}

RibbonGraph reflect(const RibbonGraph& ribbon, const std::vector<char>& reflected) {
  RibbonGraph r = ribbon;
  for (std::size_t v = 0; v < r.vertex_count && v < reflected.size(); ++v) {
    if (!reflected[v]) continue;
    std::reverse(r.rotation[v].begin(), r.rotation[v].end());
    r.reflected[v] ^= 1;
  }
  return r;
}

FaceTrace trace_faces(const RibbonGraph& ribbon) {
  FaceTrace t;
  t.vertices = ribbon.vertex_count;
  t.edges = ribbon.edge_count();
  const auto next = successor_table(ribbon);
  const int ndarts = static_cast<int>(2 * ribbon.edge_count());

  UnionFind uf(ribbon.vertex_count);
  for (const auto& e : ribbon.ends) uf.unite(e[0], e[1]);

  std::vector<int> face_root;
  std::vector<char> seen(ndarts, 0);
  for (int d = 0; d < ndarts; ++d) {
    if (seen[d]) continue;
    std::vector<int> face;
    int x = d;
    do {
      seen[x] = 1;
      face.push_back(x);
      x = next[x ^ 1];
    } while (x != d);
    face_root.push_back(uf.find(ribbon.vertex_of(d)));
    t.faces.push_back(std::move(face));
  }
  for (std::size_t v = 0; v < ribbon.vertex_count; ++v) {
    if (ribbon.rotation[v].empty()) {
      face_root.push_back(uf.find(static_cast<int>(v)));
      t.faces.emplace_back();
    }
  }

  std::vector<int> comp_index(ribbon.vertex_count, -1);
  for (std::size_t v = 0; v < ribbon.vertex_count; ++v) {
    const int root = uf.find(static_cast<int>(v));
    if (comp_index[root] == -1) {
      comp_index[root] = static_cast<int>(t.components.size());
      t.components.emplace_back();
    }
    t.components[comp_index[root]].vertices.push_back(static_cast<int>(v));
  }
  for (const auto& e : ribbon.ends) ++t.components[comp_index[uf.find(e[0])]].edges;
  for (int root : face_root) ++t.components[comp_index[root]].faces;
  for (auto& c : t.components) {
    c.euler_characteristic =
        static_cast<long>(c.vertices.size()) - static_cast<long>(c.edges) + static_cast<long>(c.faces);
    c.genus = (2 - c.euler_characteristic) / 2;
    t.genus += c.genus;
  }
  t.euler_characteristic =
      static_cast<long>(t.vertices) - static_cast<long>(t.edges) + static_cast<long>(t.faces.size());
  return t;
}

std::optional<RibbonGraph> find_planar_orientation(const RibbonGraph& ribbon, std::size_t max_free_vertices) {
  std::vector<int> free;
  for (std::size_t v = 0; v < ribbon.vertex_count; ++v) {
    if (ribbon.rotation[v].size() >= 3) free.push_back(static_cast<int>(v));
  }
  // Reversing every vertex preserves genus, so the first choice is fixed.
  if (!free.empty()) free.erase(free.begin());
  if (free.size() > max_free_vertices) {
    if (trace_faces(ribbon).genus == 0) return ribbon;
    return std::nullopt;
  }
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<char> flags(ribbon.vertex_count, 0);
    for (std::size_t i = 0; i < free.size(); ++i) flags[free[i]] = (mask >> i) & 1U;
    auto candidate = reflect(ribbon, flags);
    if (trace_faces(candidate).genus == 0) return candidate;
  }
  return std::nullopt;
}

std::vector<FaceCycle> face_nonstandard_cycles(const FatGraph& graph, const RibbonGraph& ribbon) {
  require_four_regular(graph);
  const auto cycles = standard_cycles(graph);
  if (cycles.size() != ribbon.vertex_count || ribbon.edge_count() != graph.node_count()) {
    throw InvalidGraph("ribbon graph does not belong to this fat graph");
  }
  // position of each crossing node along each cycle
  std::vector<std::array<int, 2>> pos(graph.node_count(), {-1, -1});
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
      auto& p = pos[c.nodes[i]];
      p[ribbon.ends[c.nodes[i]][0] == c.id ? 0 : 1] = static_cast<int>(i);
    }
  }

  const auto next = successor_table(ribbon);
  const auto trace = trace_faces(ribbon);
  std::vector<FaceCycle> out;
  for (std::size_t f = 0; f < trace.faces.size(); ++f) {
    const auto& face = trace.faces[f];
    if (face.empty()) continue;
    FaceCycle fc;
    fc.face = f;
    for (int d : face) {
      const int a = d ^ 1;
      const int q = next[a];
      const int cid = ribbon.vertex_of(a);
      const auto& c = cycles[cid];
      const int k = static_cast<int>(c.darts.size());
      const int from = pos[a / 2][a % 2];
      const int to = pos[q / 2][q % 2];
      if (!ribbon.reflected[cid]) {
        int steps = ((to - from) % k + k) % k;
        if (steps == 0) steps = k;
        for (int s = 0; s < steps; ++s) fc.darts.push_back(c.darts[(from + s) % k]);
      } else {
        int steps = ((from - to) % k + k) % k;
        if (steps == 0) steps = k;
        for (int s = 1; s <= steps; ++s) fc.darts.push_back(graph.partner(c.darts[((from - s) % k + k) % k]));
      }
    }
    std::vector<int> visits(graph.node_count(), 0);
    for (HalfEdgeId h : fc.darts) {
      fc.edges.push_back(graph.edge_of(h));
      fc.nodes.push_back(graph.node_of(h));
      fc.simple &= ++visits[graph.node_of(h)] == 1;
    }
    if (fc.simple) {
      CycleKind kind = CycleKind::Standard;
      const std::size_t m = fc.darts.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (graph.opposite(graph.partner(fc.darts[(i + m - 1) % m])) != fc.darts[i]) kind = CycleKind::NonStandard;
      }
      fc.kind = kind;
    }
    out.push_back(std::move(fc));
  }
  return out;
}

std::vector<FaceCycle> face_nonstandard_cycles(const FatGraph& graph) {
  return face_nonstandard_cycles(graph, intersection_graph(graph));
}

std::optional<ObstructionCertificate> vf_obstruction(const FatGraph& graph) {
  const auto ribbon = intersection_graph(graph);
  if (ribbon.edge_count() == 0 || !trace_faces(ribbon).connected()) return std::nullopt;
  const auto planar = find_planar_orientation(ribbon);
  if (!planar) return std::nullopt;
  const auto trace = trace_faces(*planar);
  if (trace.vertices > trace.faces.size()) return std::nullopt;

  ObstructionCertificate cert;
  cert.v = trace.vertices;
  cert.e = trace.edges;
  cert.f = trace.faces.size();
  cert.face_cycles = face_nonstandard_cycles(graph, *planar);
  for (std::size_t v = 0; v < planar->vertex_count; ++v) {
    if (planar->reflected[v]) cert.reflected_vertices.push_back(static_cast<int>(v));
  }
  cert.mu = Rational(static_cast<long>(cert.v), static_cast<long>(cert.f));
  cert.mu.canonicalize();
  return cert;
}

RibbonGenus ribbon_genus(const FatGraph& graph) {
  require_valid(graph);
  const auto nn = graph.node_count();
  UnionFind uf(nn);
  for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edge_count()); ++e) {
    const auto [a, b] = graph.edge_nodes(e);
    uf.unite(a, b);
  }

  std::vector<long> comp_v(nn, 0), comp_e(nn, 0), comp_b(nn, 0);
  for (std::size_t v = 0; v < nn; ++v) ++comp_v[uf.find(static_cast<int>(v))];
  for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edge_count()); ++e) ++comp_e[uf.find(graph.edge_nodes(e).first)];

  std::vector<char> seen(graph.half_edge_count(), 0);
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(graph.half_edge_count()); ++h) {
    if (seen[h]) continue;
    HalfEdgeId x = h;
    do {
      seen[x] = 1;
      x = graph.next_in_rotation(graph.partner(x));
    } while (x != h);
    ++comp_b[uf.find(graph.node_of(h))];
  }

  RibbonGenus out;
  for (std::size_t v = 0; v < nn; ++v) {
    if (uf.find(static_cast<int>(v)) != static_cast<int>(v)) continue;
    ++out.components;
    out.boundary_count += static_cast<std::size_t>(comp_b[v]);
    out.chi += comp_v[v] - comp_e[v];
    out.genus += (2 - (comp_v[v] - comp_e[v]) - comp_b[v]) / 2;
  }
  // a thickened circle is an annulus
  out.components += graph.circle_count();
  out.boundary_count += 2 * graph.circle_count();
  return out;
}

MinGenusReport min_genus_report(const FatGraph& graph) {
  MinGenusReport report;
  report.genus = ribbon_genus(graph);
  const long capped = report.genus.chi + static_cast<long>(report.genus.boundary_count);
  report.min_genus = std::max(0L, (2 - capped) / 2);
  std::ostringstream os;
  os << "chi(graph) = " << report.genus.chi << ", boundary components = " << report.genus.boundary_count
     << ", genus after capping = " << report.genus.genus << ". A closed surface F with this systolic graph has "
     << "chi(F) <= chi(graph) + " << report.genus.boundary_count << " = " << capped
     << ", with equality iff every complementary region is a disc; so genus(F) >= " << report.min_genus << ".";
  report.statement = os.str();
  return report;
}

}  // namespace fatsys
