#include "fatsys/cycles.hpp"

#include "fatsys/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fatsys {

std::string SimpleCycle::canonical_key() const {
  if (circle) return "circle:" + std::to_string(*circle);
  std::string key = "e:";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(edges[i]);
  }
  return key;
}

namespace {

CycleKind kind_of_walk(const FatGraph& g, const std::vector<HalfEdgeId>& darts) {
  const std::size_t k = darts.size();
  for (std::size_t i = 0; i < k; ++i) {
    const HalfEdgeId incoming = g.partner(darts[(i + k - 1) % k]);
    if (g.opposite(incoming) != darts[i]) return CycleKind::NonStandard;
  }
  return CycleKind::Standard;
}

SimpleCycle finish(const FatGraph& g, std::vector<HalfEdgeId> darts) {
  SimpleCycle c;
  for (HalfEdgeId h : darts) {
    c.edges.push_back(g.edge_of(h));
    c.nodes.push_back(g.node_of(h));
  }
  std::sort(c.edges.begin(), c.edges.end());
  c.kind = kind_of_walk(g, darts);
  c.darts = std::move(darts);
  return c;
}

// Depth-first search for all simple paths closing the anchor edge, using
// only edges with larger ids so every cycle is found once at its least edge.
class AnchorSearch {
 public:
  AnchorSearch(const FatGraph& g, std::size_t cap, std::atomic<std::size_t>& total)
      : g_(g), cap_(cap), total_(total), on_path_(g.node_count(), 0) {}

  // Returns false when the cap was hit.
  bool run(EdgeId anchor, std::vector<SimpleCycle>& out) {
    const auto [lo, hi] = g_.edge_half_edges(anchor);
    if (g_.node_of(lo) == g_.node_of(hi)) return emit(out, {lo});
    anchor_ = anchor;
    target_ = g_.node_of(lo);
    darts_.assign(1, lo);
    on_path_[target_] = 1;
    on_path_[g_.node_of(hi)] = 1;
    const bool ok = extend(g_.node_of(hi), out);
    on_path_[target_] = 0;
    on_path_[g_.node_of(hi)] = 0;
    return ok;
  }

 private:
  bool emit(std::vector<SimpleCycle>& out, std::vector<HalfEdgeId> darts) {
    if (total_.fetch_add(1) + 1 > cap_) return false;
    out.push_back(finish(g_, std::move(darts)));
    return true;
  }

  bool extend(NodeId at, std::vector<SimpleCycle>& out) {
    for (HalfEdgeId h : g_.rotation(at)) {
      const EdgeId e = g_.edge_of(h);
      if (e <= anchor_) continue;
      const NodeId next = g_.node_of(g_.partner(h));
      if (next == at) continue;
      if (next == target_) {
        darts_.push_back(h);
        const bool ok = emit(out, darts_);
        darts_.pop_back();
        if (!ok) return false;
        continue;
      }
      if (on_path_[next]) continue;
      on_path_[next] = 1;
      darts_.push_back(h);
      const bool ok = extend(next, out);
      darts_.pop_back();
      on_path_[next] = 0;
      if (!ok) return false;
    }
    return true;
  }

  const FatGraph& g_;
  std::size_t cap_;
  std::atomic<std::size_t>& total_;
  std::vector<char> on_path_;
  std::vector<HalfEdgeId> darts_;
  EdgeId anchor_ = 0;
  NodeId target_ = 0;
};

std::vector<SimpleCycle> assemble(const FatGraph& g, std::vector<std::vector<SimpleCycle>>& per_anchor,
                                  std::size_t cap) {
  std::vector<SimpleCycle> all;
  for (auto& chunk : per_anchor) {
    for (auto& c : chunk) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), [](const SimpleCycle& a, const SimpleCycle& b) { return a.edges < b.edges; });
  for (std::size_t c = 0; c < g.circle_count(); ++c) {
    if (all.size() + 1 > cap) throw CycleCapExceeded(cap);
    SimpleCycle circle;
    circle.circle = static_cast<int>(c);
    circle.kind = CycleKind::Standard;
    all.push_back(std::move(circle));
  }
  return all;
}

}  // namespace

std::vector<SimpleCycle> enumerate_simple_cycles_serial(const FatGraph& graph, std::size_t cap) {
  require_valid(graph);
  const auto ne = static_cast<EdgeId>(graph.edge_count());
  std::vector<std::vector<SimpleCycle>> per_anchor(ne);
  std::atomic<std::size_t> total{0};
  AnchorSearch search(graph, cap, total);
  for (EdgeId e = 0; e < ne; ++e) {
    if (!search.run(e, per_anchor[e])) throw CycleCapExceeded(cap);
  }
  return assemble(graph, per_anchor, cap);
}

std::vector<SimpleCycle> enumerate_simple_cycles(const FatGraph& graph, std::size_t cap) {
  require_valid(graph);
  const auto ne = static_cast<EdgeId>(graph.edge_count());
  std::vector<std::vector<SimpleCycle>> per_anchor(ne);
  std::atomic<std::size_t> total{0};
  std::atomic<bool> overflow{false};

#pragma omp parallel
  {
    AnchorSearch search(graph, cap, total);
#pragma omp for schedule(dynamic, 1)
    for (EdgeId e = 0; e < ne; ++e) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      if (!search.run(e, per_anchor[e])) overflow = true;
    }
  }
  if (overflow) throw CycleCapExceeded(cap);
  return assemble(graph, per_anchor, cap);
}

SimpleCycle cycle_from_edges(const FatGraph& g, std::vector<EdgeId> edge_set) {
  std::sort(edge_set.begin(), edge_set.end());
  if (edge_set.empty()) throw NotACycle("empty edge set");
  if (std::adjacent_find(edge_set.begin(), edge_set.end()) != edge_set.end()) throw NotACycle("repeated edge");

  // half-edges of the support, grouped by node
  std::map<NodeId, std::vector<HalfEdgeId>> incident;
  for (EdgeId e : edge_set) {
    if (e < 0 || e >= static_cast<EdgeId>(g.edge_count())) throw NotACycle("edge id out of range");
    const auto [a, b] = g.edge_half_edges(e);
    incident[g.node_of(a)].push_back(a);
    incident[g.node_of(b)].push_back(b);
  }
  for (const auto& [v, hs] : incident) {
    if (hs.size() != 2) throw NotACycle("node " + g.nodes()[v].name + " has degree " + std::to_string(hs.size()));
  }

  const HalfEdgeId start = g.edge_half_edges(edge_set.front()).first;
  std::vector<HalfEdgeId> darts;
  HalfEdgeId h = start;
  do {
    darts.push_back(h);
    const HalfEdgeId arrive = g.partner(h);
    const auto& hs = incident.at(g.node_of(arrive));
    h = hs[0] == arrive ? hs[1] : hs[0];
  } while (h != start && darts.size() <= edge_set.size());
  if (darts.size() != edge_set.size()) throw NotACycle("edge set is not connected");
  return finish(g, std::move(darts));
}

CycleKind classify_cycle(const FatGraph& graph, const std::vector<EdgeId>& edge_set) {
  return cycle_from_edges(graph, edge_set).kind;
}

}  // namespace fatsys
