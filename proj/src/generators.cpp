#include "fatsys/generators.hpp"

#include "fatsys/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace fatsys {

std::vector<int> PlainGraph::degrees() const {
  std::vector<int> deg(names.size(), 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int PlainGraph::add_vertex(std::string name) {
  names.push_back(std::move(name));
  return static_cast<int>(names.size() - 1);
}

FatGraph gen_wheel_family(int n) {
  if (n < 3) throw BadParameter("wheel family needs n >= 3, got " + std::to_string(n));
  FatGraphBuilder b;
  std::vector<NodeId> p(n), w(n);
  for (int i = 0; i < n; ++i) p[i] = b.add_node("p" + std::to_string(i + 1), 4);
  for (int i = 0; i < n; ++i) w[i] = b.add_node("w" + std::to_string(i + 1), 4);
  auto prev = [n](int i) { return (i + n - 1) % n; };
  auto next = [n](int i) { return (i + 1) % n; };

  // p_i slots: 0 hub in, 1 triangle in, 2 hub out, 3 triangle out.
  // w_i slots: 0 triangle i in, 1 triangle i+1 in, 2 triangle i out,
  //            3 triangle i+1 out.
  // Triangle i runs w_{i-1} -> p_i -> w_i -> w_{i-1}.
  for (int i = 0; i < n; ++i) {
    b.connect(p[i], 2, p[next(i)], 0);
    b.connect(w[prev(i)], 3, p[i], 1);
    b.connect(p[i], 3, w[i], 0);
    b.connect(w[i], 2, w[prev(i)], 1);
  }
  return b.build();
}

std::vector<RotationEntry> example_g8_rotations() {
  return {
      {"v1", {"v2", "v4", "v3", "v8"}}, {"v2", {"v1", "v4", "v3", "v6"}}, {"v3", {"v1", "v7", "v2", "v6"}},
      {"v4", {"v1", "v2", "v8", "v5"}}, {"v5", {"v4", "v8", "v6", "v7"}}, {"v6", {"v2", "v3", "v5", "v7"}},
      {"v7", {"v3", "v5", "v6", "v8"}}, {"v8", {"v1", "v7", "v4", "v5"}},
  };
}

FatGraph gen_example_g8() { return FatGraph::from_rotations(example_g8_rotations()); }

PlainGraph gen_trivalent_girth(int n0) {
  if (n0 < 4) throw BadParameter("girth construction needs n0 >= 4, got " + std::to_string(n0));
  const int m = n0 * n0 - 3 * n0;
  const int stride = n0 - 3;
  PlainGraph g;
  for (int i = 1; i <= m; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 1; i <= m; ++i) g.add_vertex("u" + std::to_string(i));
  auto v = [](int i) { return i - 1; };
  auto u = [m](int i) { return m + i - 1; };
  auto wrap = [m](int i) { return (i - 1) % m + 1; };

  for (int i = 1; i <= m; ++i) g.add_edge(v(i), v(wrap(i + 1)));
  for (int j = 1; j <= m; ++j) g.add_edge(v(j), u(j));
  for (int i = 1; i <= stride; ++i) {
    for (int r = 0; r < n0; ++r) g.add_edge(u(wrap(i + r * stride)), u(wrap(i + (r + 1) * stride)));
  }
  return g;
}

PlainGraph gen_unitrivalent_girth(int n0) {
  PlainGraph g = gen_trivalent_girth(n0);
  auto key = [](const std::pair<int, int>& e) { return std::minmax(e.first, e.second); };
  const auto least = std::min_element(g.edges.begin(), g.edges.end(),
                                      [&](const auto& a, const auto& b) { return key(a) < key(b); });
  const auto [x, y] = *least;
  g.edges.erase(least);
  const int hub = g.add_vertex("hub");
  const int leaf = g.add_vertex("leaf");
  g.add_edge(hub, x);
  g.add_edge(hub, y);
  g.add_edge(hub, leaf);
  return g;
}

std::size_t unitrivalent_vertex_count(int n0) {
  const auto n = static_cast<std::size_t>(n0);
  return 2 * (n * n - 3 * n + 1);
}

namespace {

constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

struct Adjacency {
  std::vector<std::vector<std::pair<int, int>>> out;  // (edge, neighbour)
  bool has_loop = false;
};

Adjacency adjacency(const PlainGraph& g) {
  Adjacency adj;
  adj.out.resize(g.vertex_count());
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    const auto [a, b] = g.edges[k];
    if (a == b) {
      adj.has_loop = true;
      continue;
    }
    adj.out[a].emplace_back(k, b);
    adj.out[b].emplace_back(k, a);
  }
  return adj;
}

// Shortest cycle through the BFS tree of root, pruned at `bound`.
std::size_t shortest_from(const Adjacency& adj, int root, std::size_t bound) {
  const std::size_t n = adj.out.size();
  std::vector<int> dist(n, -1), parent_edge(n, -1);
  std::deque<int> queue{root};
  dist[root] = 0;
  std::size_t best = bound;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
    for (const auto& [k, y] : adj.out[x]) {
      if (k == parent_edge[x]) continue;
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        parent_edge[y] = k;
        queue.push_back(y);
      } else {
        best = std::min(best, static_cast<std::size_t>(dist[x] + dist[y] + 1));
      }
    }
  }
  return best;
}

}  // namespace

std::optional<std::size_t> girth_serial(const PlainGraph& graph) {
  const auto adj = adjacency(graph);
  if (adj.has_loop) return 1;
  std::size_t best = kNoCycle;
  for (int r = 0; r < static_cast<int>(graph.vertex_count()); ++r) best = std::min(best, shortest_from(adj, r, best));
  if (best == kNoCycle) return std::nullopt;
  return best;
}

std::optional<std::size_t> girth(const PlainGraph& graph) {
  const auto adj = adjacency(graph);
  if (adj.has_loop) return 1;
  std::size_t best = kNoCycle;
  const int n = static_cast<int>(graph.vertex_count());
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (int r = 0; r < n; ++r) best = std::min(best, shortest_from(adj, r, best));
  if (best == kNoCycle) return std::nullopt;
  return best;
}

}  // namespace fatsys
