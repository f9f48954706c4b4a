#include "support.hpp"

#include "fatsys/errors.hpp"

#include <doctest.h>

using namespace fatsys;
using namespace testsupport;

TEST_CASE("rotation notation builds the 8-node example") {
  const auto g = gen_example_g8();
  CHECK(g.node_count() == 8);
  CHECK(g.edge_count() == 16);
  CHECK(validate(g).valid());
  const auto cycles = standard_cycles(g);
  CHECK(cycles.size() == 5);
  std::size_t total = 0;
  for (const auto& c : cycles) total += c.length();
  // every edge lies on exactly one standard cycle
  CHECK(total == 16);
}

TEST_CASE("rotation lists are recovered from slots") {
  const auto g = gen_example_g8();
  const auto rot = example_g8_rotations();
  for (const auto& entry : rot) {
    const auto v = *g.find_node(entry.node);
    std::vector<std::string> seen;
    for (HalfEdgeId h : g.rotation(v)) seen.push_back(g.nodes()[g.node_of(g.partner(h))].name);
    CHECK(seen == entry.neighbours);
  }
}

TEST_CASE("occurrence-order pairing on double edges") {
  const auto g = load_graph("g8_minus_c3.rot");
  CHECK(g.node_count() == 5);
  CHECK(g.edge_count() == 10);
  CHECK(validate(g).valid());
  const auto v1 = *g.find_node("v1");
  const auto v2 = *g.find_node("v2");
  // first mention of v2 at v1 (slot 0) pairs with first mention of v1 at v2 (slot 0)
  CHECK(g.node_of(g.partner(g.at(v1, 0))) == v2);
  CHECK(g.slot_of(g.partner(g.at(v1, 0))) == 0);
  CHECK(g.slot_of(g.partner(g.at(v1, 2))) == 2);
  std::map<std::pair<int, int>, int> multiplicity;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    auto [a, b] = g.edge_nodes(e);
    ++multiplicity[std::minmax(a, b)];
  }
  int doubles = 0;
  for (const auto& [k, m] : multiplicity) doubles += m == 2;
  CHECK(doubles == 2);
}

TEST_CASE("wheel family sizes") {
  for (int n = 3; n <= 8; ++n) {
    const auto g = gen_wheel_family(n);
    CHECK(g.node_count() == static_cast<std::size_t>(2 * n));
    CHECK(g.edge_count() == static_cast<std::size_t>(4 * n));
    CHECK(validate(g).valid());
    const auto cycles = standard_cycles(g);
    REQUIRE(cycles.size() == static_cast<std::size_t>(n + 1));
    int triangles = 0;
    for (const auto& c : cycles) triangles += c.length() == 3;
    CHECK(triangles == (n == 3 ? 4 : n));
  }
  CHECK_THROWS_AS(gen_wheel_family(2), BadParameter);
}

TEST_CASE("validation diagnoses broken structures") {
  SUBCASE("odd valence and fixed points") {
    FatGraphBuilder b;
    const auto x = b.add_node("x", 3);
    b.connect(x, 0, x, 1);
    const auto r = validate(b.build());
    CHECK(r.has(ViolationKind::OddValence));
    CHECK(r.has(ViolationKind::PairingFixedPoint));
  }
  SUBCASE("valence two") {
    FatGraphBuilder b;
    const auto x = b.add_node("x", 2);
    b.connect(x, 0, x, 1);
    CHECK(validate(b.build()).has(ViolationKind::ValenceTooSmall));
  }
  SUBCASE("non-simple standard orbit") {
    FatGraphBuilder b;
    const auto x = b.add_node("x", 4);
    b.connect(x, 0, x, 1);
    b.connect(x, 2, x, 3);
    const auto r = validate(b.build());
    CHECK(r.has(ViolationKind::NonSimpleOrbit));
    CHECK_THROWS_AS(require_valid(b.build()), InvalidGraph);
  }
  SUBCASE("circles alone are valid") {
    FatGraphBuilder b;
    b.add_circle("a");
    const auto g = b.build();
    CHECK(validate(g).valid());
    const auto cycles = standard_cycles(g);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].is_circle());
  }
}

TEST_CASE("standard cycles are canonical under relabeling") {
  std::mt19937_64 rng(7);
  for (const auto& entry : corpus()) {
    const auto a = standard_cycles(entry.graph);
    const auto b = standard_cycles(relabel(entry.graph, rng));
    REQUIRE(a.size() == b.size());
    std::multiset<std::size_t> la, lb;
    for (const auto& c : a) la.insert(c.length());
    for (const auto& c : b) lb.insert(c.length());
    CHECK_MESSAGE(la == lb, entry.name);
  }
}

TEST_CASE("deleting the hub leaves bigons") {
  for (int n = 3; n <= 6; ++n) {
    const auto g = gen_wheel_family(n);
    const auto traced = delete_standard_cycles_traced(g, {hub_cycle(g, n)});
    const auto& sub = traced.graph;
    CHECK(validate(sub).valid());
    CHECK(sub.node_count() == static_cast<std::size_t>(n));
    CHECK(sub.edge_count() == static_cast<std::size_t>(2 * n));
    const auto cycles = standard_cycles(sub);
    CHECK(cycles.size() == static_cast<std::size_t>(n));
    for (const auto& c : cycles) CHECK(c.length() == 2);
    // each merged edge came from two spokes
    std::size_t merged = 0;
    for (const auto& origin : traced.edge_origin) merged += origin.edges.size() == 2;
    CHECK(merged == static_cast<std::size_t>(n));
  }
}

TEST_CASE("deleting a triangle of G_n gives the expected cycle lengths") {
  for (int n = 4; n <= 6; ++n) {
    const auto sub = gn1(n);
    CHECK(validate(sub).valid());
    std::multiset<std::size_t> lengths;
    for (const auto& c : standard_cycles(sub)) lengths.insert(c.length());
    std::multiset<std::size_t> expected{static_cast<std::size_t>(n - 1), 2, 2};
    for (int j = 3; j <= n - 1; ++j) expected.insert(3);
    CHECK(lengths == expected);
  }
}

TEST_CASE("deletion errors and smoothed circles") {
  const auto g = gen_example_g8();
  CHECK_THROWS_AS(delete_standard_cycles(g, {0, 1, 2, 3, 4}), DeletingEverything);
  CHECK_THROWS_AS(delete_standard_cycles(g, {7}), UnknownCycleId);

  FatGraphBuilder b;
  const auto x = b.add_node("x", 4);
  const auto y = b.add_node("y", 4);
  b.connect(x, 2, y, 0);
  b.connect(y, 2, x, 0);
  b.connect(x, 3, y, 1);
  b.connect(y, 3, x, 1);
  const auto bigons = b.build();
  REQUIRE(standard_cycles(bigons).size() == 2);
  const auto traced = delete_standard_cycles_traced(bigons, {0});
  CHECK(traced.graph.node_count() == 0);
  CHECK(traced.graph.edge_count() == 0);
  REQUIRE(traced.graph.circle_count() == 1);
  CHECK(traced.graph.circles()[0].rfind("circle@", 0) == 0);
  CHECK(traced.circle_origin[0].edges.size() == 2);
}

TEST_CASE("sequential deletion matches simultaneous deletion") {
  const int n = 5;
  const auto g = gen_wheel_family(n);
  const int hub = hub_cycle(g, n);
  const int tri = find_standard_cycle(g, {"p2", "w1", "w2"}, 3);
  const auto step = delete_standard_cycles(g, {hub});
  // after the hub goes, triangle 2 is the bigon on w1, w2
  const auto a = delete_standard_cycles(step, {find_standard_cycle(step, {"w1", "w2"}, 2)});
  const auto b = delete_standard_cycles(g, {tri, hub});
  CHECK(a.node_count() == b.node_count());
  CHECK(a.edge_count() == b.edge_count());
  CHECK(a.circle_count() == b.circle_count());
  std::multiset<std::size_t> la, lb;
  for (const auto& c : standard_cycles(a)) la.insert(c.length());
  for (const auto& c : standard_cycles(b)) lb.insert(c.length());
  CHECK(la == lb);
}
