#pragma once

// Test-side helpers: graph mutations, brute-force oracles and the corpus.

#include "fatsys/admissibility.hpp"
#include "fatsys/cycles.hpp"
#include "fatsys/fatgraph.hpp"
#include "fatsys/generators.hpp"
#include "fatsys/io.hpp"
#include "fatsys/rational.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testsupport {

using namespace fatsys;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline std::string data_path(const std::string& name) { return std::string(FATSYS_DATA_DIR) + "/" + name; }

inline FatGraph load_graph(const std::string& name) { return io::parse_fatgraph(read_file(data_path(name))); }

// Random valid fat graph built from closed curves: each node is a crossing
// of m >= 2 distinct curves, curve r passing through slots r and r + m.
// Every curve with no crossing becomes a circle.
inline FatGraph random_fatgraph(std::mt19937_64& rng, int curves, int crossings, bool higher_valence = false,
                                int circles = 0) {
  struct Visit {
    int node;
    int in_slot;
    int out_slot;
  };
  std::vector<std::vector<Visit>> along(curves);
  FatGraphBuilder b;
  for (int x = 0; x < crossings; ++x) {
    int m = 2;
    if (higher_valence && curves >= 3 && rng() % 4 == 0) m = 3;
    std::vector<int> members(curves);
    std::iota(members.begin(), members.end(), 0);
    std::shuffle(members.begin(), members.end(), rng);
    members.resize(m);
    const NodeId v = b.add_node("n" + std::to_string(x), 2 * m);
    for (int r = 0; r < m; ++r) {
      const bool forward = rng() % 2 == 0;
      along[members[r]].push_back({v, forward ? r : r + m, forward ? r + m : r});
    }
  }
  int circle_count = circles;
  for (auto& visits : along) {
    if (visits.empty()) {
      ++circle_count;
      continue;
    }
    std::shuffle(visits.begin(), visits.end(), rng);
    for (std::size_t i = 0; i < visits.size(); ++i) {
      const auto& a = visits[i];
      const auto& c = visits[(i + 1) % visits.size()];
      b.connect(a.node, a.out_slot, c.node, c.in_slot);
    }
  }
  for (int c = 0; c < circle_count; ++c) b.add_circle("o" + std::to_string(c));
  return b.build();
}

// Isomorphic copy: nodes permuted and renamed, each rotation shifted by a
// random amount, half-edge ids shuffled.
inline FatGraph relabel(const FatGraph& g, std::mt19937_64& rng) {
  const std::size_t nn = g.node_count();
  std::vector<NodeId> node_perm(nn);
  std::iota(node_perm.begin(), node_perm.end(), 0);
  std::shuffle(node_perm.begin(), node_perm.end(), rng);
  std::vector<int> shift(nn);
  for (std::size_t v = 0; v < nn; ++v) shift[v] = static_cast<int>(rng() % std::max(1, g.valence(v)));

  std::vector<Node> nodes(nn);
  for (std::size_t v = 0; v < nn; ++v) {
    nodes[node_perm[v]] = {"r" + std::to_string(node_perm[v]) + "_" + g.nodes()[v].name, g.valence(v)};
  }
  const std::size_t nh = g.half_edge_count();
  std::vector<HalfEdgeId> he_perm(nh);
  std::iota(he_perm.begin(), he_perm.end(), 0);
  std::shuffle(he_perm.begin(), he_perm.end(), rng);
  std::vector<HalfEdge> half_edges(nh);
  std::vector<HalfEdgeId> pairing(nh);
  for (std::size_t h = 0; h < nh; ++h) {
    const auto& old = g.half_edges()[h];
    half_edges[he_perm[h]] = {node_perm[old.node], (old.slot + shift[old.node]) % g.valence(old.node)};
    pairing[he_perm[h]] = he_perm[g.partner(static_cast<HalfEdgeId>(h))];
  }
  auto circles = g.circles();
  std::shuffle(circles.begin(), circles.end(), rng);
  return FatGraph(std::move(nodes), std::move(half_edges), std::move(pairing), std::move(circles));
}

// Every connected edge subset in which each node has degree exactly 2.
// Standard iff the two half-edges used at every node are opposite slots.
inline std::map<std::string, bool> brute_force_cycles(const FatGraph& g) {
  const std::size_t ne = g.edge_count();
  if (ne > 20) throw std::runtime_error("brute force limited to 20 edges");
  std::map<std::string, bool> out;
  for (unsigned long mask = 1; mask < (1ul << ne); ++mask) {
    std::vector<std::vector<HalfEdgeId>> used(g.node_count());
    for (std::size_t e = 0; e < ne; ++e) {
      if (!(mask >> e & 1)) continue;
      const auto [a, b] = g.edge_half_edges(static_cast<EdgeId>(e));
      used[g.node_of(a)].push_back(a);
      used[g.node_of(b)].push_back(b);
    }
    bool ok = true;
    std::vector<int> touched;
    for (std::size_t v = 0; v < used.size() && ok; ++v) {
      if (used[v].empty()) continue;
      if (used[v].size() != 2) ok = false;
      touched.push_back(static_cast<int>(v));
    }
    if (!ok) continue;
    // connectivity by union-find over nodes
    std::vector<int> parent(g.node_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 0; e < ne; ++e) {
      if (!(mask >> e & 1)) continue;
      const auto [a, b] = g.edge_nodes(static_cast<EdgeId>(e));
      parent[find(a)] = find(b);
    }
    const int root = find(touched.front());
    if (!std::all_of(touched.begin(), touched.end(), [&](int v) { return find(v) == root; })) continue;

    bool standard = true;
    for (int v : touched) {
      const int val = g.valence(v);
      const int d = std::abs(g.slot_of(used[v][0]) - g.slot_of(used[v][1]));
      if (d != val / 2) standard = false;
    }
    std::string key = "e:";
    bool first = true;
    for (std::size_t e = 0; e < ne; ++e) {
      if (!(mask >> e & 1)) continue;
      if (!first) key += ',';
      key += std::to_string(e);
      first = false;
    }
    out[key] = standard;
  }
  for (std::size_t c = 0; c < g.circle_count(); ++c) out["circle:" + std::to_string(c)] = true;
  return out;
}

// Smallest nonempty edge subset forming a connected 2-regular subgraph.
inline std::optional<std::size_t> brute_force_girth(const PlainGraph& g) {
  const std::size_t ne = g.edges.size();
  if (ne > 22) throw std::runtime_error("brute force limited to 22 edges");
  std::optional<std::size_t> best;
  for (unsigned long mask = 1; mask < (1ul << ne); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (best && size >= *best) continue;
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 0; e < ne; ++e) {
      if (!(mask >> e & 1)) continue;
      const auto [a, b] = g.edges[e];
      ++deg[a];
      ++deg[b];
      parent[find(a)] = find(b);
    }
    int root = -1;
    bool ok = true;
    for (std::size_t v = 0; v < deg.size() && ok; ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2) ok = false;
      if (root < 0) root = find(static_cast<int>(v));
      if (find(static_cast<int>(v)) != root) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

inline PlainGraph random_plain_graph(std::mt19937_64& rng, int vertices, int edges, bool allow_loops = false) {
  PlainGraph g;
  for (int v = 0; v < vertices; ++v) g.add_vertex("x" + std::to_string(v));
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  while (static_cast<int>(g.edges.size()) < edges) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a == b && !allow_loops) continue;
    g.add_edge(a, b);
  }
  return g;
}

inline std::set<std::string> keys_of(const std::vector<SimpleCycle>& cycles) {
  std::set<std::string> out;
  for (const auto& c : cycles) out.insert(c.canonical_key());
  return out;
}

// Standard cycle id of the cycle through every node in `names` with the
// given length.
inline int find_standard_cycle(const FatGraph& g, const std::vector<std::string>& names, std::size_t length) {
  const auto cycles = standard_cycles(g);
  for (const auto& c : cycles) {
    if (c.is_circle() || c.length() != length) continue;
    bool all = true;
    for (const auto& name : names) {
      const auto v = g.find_node(name);
      if (!v || std::find(c.nodes.begin(), c.nodes.end(), *v) == c.nodes.end()) all = false;
    }
    if (all) return c.id;
  }
  throw std::runtime_error("no such standard cycle");
}

inline int hub_cycle(const FatGraph& wheel, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  return find_standard_cycle(wheel, names, n);
}

inline int first_triangle(const FatGraph& wheel, int n) {
  return find_standard_cycle(wheel, {"p1", "w" + std::to_string(n), "w1"}, 3);
}

inline FatGraph gn0(int n) {
  const auto g = gen_wheel_family(n);
  return delete_standard_cycles(g, {hub_cycle(g, n)});
}

inline FatGraph gn1(int n) {
  const auto g = gen_wheel_family(n);
  return delete_standard_cycles(g, {first_triangle(g, n)});
}

inline MetricAssignment constant_metric(const FatGraph& g, const Rational& value) {
  MetricAssignment m;
  m.edge_lengths.assign(g.edge_count(), value);
  m.circle_lengths.assign(g.circle_count(), Rational(1));
  return m;
}

// The printed metric on G_n^1 (triangle at p1 removed): hub edges 1/(n-1),
// the two bigons 1/2, spokes of the remaining triangles
// 1/2 + eps/2 - 1/(2(n-1)), their ring edges 1/n - eps.
inline MetricAssignment gn1_printed_metric(const FatGraph& g, int n, const Rational& eps) {
  MetricAssignment m;
  const std::string p2 = "p2";
  const std::string pn = "p" + std::to_string(n);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto [a, b] = g.edge_nodes(e);
    const std::string& na = g.nodes()[a].name;
    const std::string& nb = g.nodes()[b].name;
    const bool pa = na[0] == 'p';
    const bool pb = nb[0] == 'p';
    Rational len;
    if (pa && pb) {
      len = Rational(1, n - 1);
    } else if (na == p2 || nb == p2 || na == pn || nb == pn) {
      len = Rational(1, 2);
    } else if (pa || pb) {
      len = Rational(1, 2) + eps / 2 - Rational(1, 2 * (n - 1));
    } else {
      len = Rational(1, n) - eps;
    }
    len.canonicalize();
    m.edge_lengths.push_back(len);
  }
  m.circle_lengths.assign(g.circle_count(), Rational(1));
  return m;
}

// A standard cycle of G_n^1 through a ring node (as opposed to the shortened hub).
inline bool is_ring_triangle(const FatGraph& g, const StandardCycle& c) {
  return c.length() == 3 &&
         std::any_of(c.nodes.begin(), c.nodes.end(), [&](NodeId v) { return g.nodes()[v].name[0] == 'w'; });
}

struct CorpusEntry {
  std::string name;
  FatGraph graph;
};

// Fixed corpus plus seeded random graphs.
inline std::vector<CorpusEntry> corpus(bool include_random = true) {
  std::vector<CorpusEntry> out;
  for (int n = 3; n <= 8; ++n) out.push_back({"wheel-" + std::to_string(n), gen_wheel_family(n)});
  for (int n = 3; n <= 6; ++n) {
    out.push_back({"wheel-" + std::to_string(n) + "-hub-deleted", gn0(n)});
    out.push_back({"wheel-" + std::to_string(n) + "-triangle-deleted", gn1(n)});
  }
  const auto g8 = gen_example_g8();
  out.push_back({"g8", g8});
  for (int c = 0; c < static_cast<int>(standard_cycles(g8).size()); ++c) {
    out.push_back({"g8-minus-" + std::to_string(c), delete_standard_cycles(g8, {c})});
  }
  out.push_back({"g8-minus-c3-file", load_graph("g8_minus_c3.rot")});
  out.push_back({"g8-minus-c4-file", load_graph("g8_minus_c4.rot")});
  {
    FatGraphBuilder b;
    b.add_circle("a");
    out.push_back({"circle", b.build()});
  }
  {
    FatGraphBuilder b;
    const auto v = b.add_node("x", 4);
    b.connect(v, 0, v, 2);
    b.connect(v, 1, v, 3);
    out.push_back({"two-loops", b.build()});
  }
  {
    FatGraphBuilder b;
    const auto x = b.add_node("x", 4);
    const auto y = b.add_node("y", 4);
    b.connect(x, 2, y, 0);
    b.connect(y, 2, x, 0);
    b.connect(x, 3, y, 1);
    b.connect(y, 3, x, 1);
    b.add_circle("o");
    out.push_back({"two-bigons-and-circle", b.build()});
  }
  if (include_random) {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 24; ++i) {
      const int curves = 2 + static_cast<int>(rng() % 3);
      const int crossings = 1 + static_cast<int>(rng() % 6);
      out.push_back({"random-" + std::to_string(i), random_fatgraph(rng, curves, crossings, i % 3 == 0)});
    }
  }
  return out;
}

}  // namespace testsupport
