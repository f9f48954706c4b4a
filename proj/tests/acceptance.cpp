// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include "support.hpp"

#include "fatsys/hyperbolic.hpp"
#include "fatsys/topology.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace fatsys;
using namespace testsupport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

bool four_regular(const FatGraph& g) {
  return std::all_of(g.nodes().begin(), g.nodes().end(), [](const Node& n) { return n.valence == 4; });
}

Outcome family_verdicts() {
  Outcome o;
  double slowest = 0;
  for (int n = 3; n <= 8; ++n) {
    const auto t0 = Clock::now();
    const auto g = gen_wheel_family(n);
    const auto v = check_admissibility(g);
    const auto m = check_minimality(g);
    const double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    if (v.admissible() || v.margin > 0) o.fail("n=" + std::to_string(n) + " margin " + to_fraction_string(v.margin));
    if (!m.minimal_non_admissible) o.fail("n=" + std::to_string(n) + " not minimal");
    if (s >= 10) o.fail("n=" + std::to_string(n) + " took " + std::to_string(s) + " s");
  }
  if (o.pass) o.detail << "n=3..8 NotAdmissible, t*=0, MinimalNonAdmissible; slowest " << slowest << " s";
  return o;
}

Outcome obstruction_agreement() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const auto c = vf_obstruction(gen_wheel_family(n));
    if (!c || c->v != static_cast<std::size_t>(n + 1) || c->f != static_cast<std::size_t>(n + 1)) {
      o.fail("G_" + std::to_string(n) + " certificate missing or wrong size");
    }
  }
  const auto c8 = vf_obstruction(gen_example_g8());
  if (!c8 || c8->v != 5 || c8->f != 5) o.fail("8-node example certificate missing or wrong size");
  std::size_t fired = 0, contradictions = 0;
  for (const auto& entry : corpus()) {
    if (!four_regular(entry.graph) || !vf_obstruction(entry.graph)) continue;
    ++fired;
    if (check_admissibility(entry.graph).margin > 0) {
      ++contradictions;
      o.fail("contradiction on " + entry.name);
    }
  }
  if (o.pass) o.detail << "v=f=n+1 on G_3..G_8, v=f=5 on the 8-node example; fired on " << fired << " corpus graphs, "
                       << contradictions << " contradictions";
  return o;
}

Outcome printed_witnesses() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const auto g = gn0(n);
    const auto r = verify_metric(g, constant_metric(g, Rational(1, 2)));
    bool sums = std::all_of(r.standard.begin(), r.standard.end(), [](const StandardSum& s) { return s.sum == 1; });
    if (!r.pass || !sums || !r.min_slack || *r.min_slack < Rational(1, 2)) {
      o.fail("all-1/2 metric fails on hub deletion n=" + std::to_string(n));
    }
  }
  for (const auto& name : {std::string("g8_minus_c3"), std::string("g8_minus_c4")}) {
    const auto g = load_graph(name + ".rot");
    const auto m = io::resolve_metric(g, io::parse_metric(read_file(data_path(name + ".metric"))));
    if (!verify_metric(g, m).pass) o.fail(name + " printed solution fails");
  }
  if (o.pass) o.detail << "all-1/2 on hub deletions n=3..8; printed x0..x7 for G-c3 and G-c4 verify exactly";
  return o;
}

Outcome documented_discrepancy() {
  Outcome o;
  for (int n = 4; n <= 6; ++n) {
    const auto g = gn1(n);
    const auto r = verify_metric(g, gn1_printed_metric(g, n, Rational(1, 2 * n)));
    const auto cycles = standard_cycles(g);
    const Rational expected = 1 - Rational(1, n * (n - 1));
    std::size_t triangles = 0;
    for (const auto& s : r.standard) {
      if (!is_ring_triangle(g, cycles[s.cycle_id])) continue;
      ++triangles;
      if (s.sum != expected) o.fail("n=" + std::to_string(n) + " triangle sum " + to_fraction_string(s.sum));
    }
    if (r.pass) o.fail("n=" + std::to_string(n) + " printed metric unexpectedly passes");
    if (triangles != static_cast<std::size_t>(n - 3)) o.fail("n=" + std::to_string(n) + " triangle count");
    const auto v = check_admissibility(g);
    if (!(v.margin > 0) || !v.witness || !verify_metric(g, *v.witness).pass) {
      o.fail("n=" + std::to_string(n) + " no admissible witness found");
    }
  }
  if (o.pass) o.detail << "triangle sums 1-1/(n(n-1)) = 11/12, 19/20, 29/30 for n=4,5,6; solver witnesses have t*>0";
  return o;
}

Outcome cycle_oracle() {
  Outcome o;
  std::size_t graphs = 0, cycles = 0;
  for (const auto& entry : corpus()) {
    if (entry.graph.edge_count() > 14) continue;
    ++graphs;
    const auto oracle = brute_force_cycles(entry.graph);
    std::map<std::string, bool> found;
    for (const auto& c : enumerate_simple_cycles(entry.graph)) found[c.canonical_key()] = c.is_standard();
    cycles += found.size();
    if (found != oracle) o.fail("mismatch on " + entry.name);
  }
  if (o.pass) o.detail << graphs << " corpus graphs with <= 14 edges, " << cycles << " cycles, key sets equal";
  return o;
}

Outcome girth_constructions() {
  Outcome o;
  double slowest = 0;
  for (int n0 = 4; n0 <= 8; ++n0) {
    const auto t0 = Clock::now();
    const auto tri = gen_trivalent_girth(n0);
    const auto deg = tri.degrees();
    if (tri.vertex_count() != static_cast<std::size_t>(2 * (n0 * n0 - 3 * n0))) o.fail("trivalent vertex count");
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; })) o.fail("not 3-regular");
    if (girth(tri) != static_cast<std::size_t>(n0)) o.fail("trivalent girth n0=" + std::to_string(n0));
    const auto uni = gen_unitrivalent_girth(n0);
    auto udeg = uni.degrees();
    std::sort(udeg.begin(), udeg.end());
    if (uni.vertex_count() != static_cast<std::size_t>(2 * (n0 * n0 - 3 * n0 + 1))) o.fail("uni vertex count");
    if (udeg.front() != 1 || !std::all_of(udeg.begin() + 1, udeg.end(), [](int d) { return d == 3; })) {
      o.fail("uni degree sequence");
    }
    if (girth(uni) != static_cast<std::size_t>(n0)) o.fail("uni girth n0=" + std::to_string(n0));
    const double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    if (s >= 5) o.fail("n0=" + std::to_string(n0) + " took " + std::to_string(s) + " s");
  }
  if (o.pass) o.detail << "n0=4..8 sizes, degrees and BFS girth exact; slowest " << slowest << " s";
  return o;
}

Outcome hyperbolic_suites() {
  Outcome o;
  double min_lem1 = 1e300, min_lem2 = 1e300;
  for (int i = 5; i <= 100; ++i) {
    const double l = i / 10.0;
    min_lem1 = std::min(min_lem1, hyperbolic::pants_height(l, 2) - l);
    min_lem2 = std::min(min_lem2, hyperbolic::pants_height_equilateral(l) - l / 2);
    const double a = hyperbolic::capping_gap(l);
    const long t = hyperbolic::capping_girth(l);
    if (!(a > 0)) o.fail("a(l) <= 0 at l=" + std::to_string(l));
    if (!(t * a > l) || !(l >= (t - 1) * a)) o.fail("t(l) bracket fails at l=" + std::to_string(l));
  }
  if (!(min_lem1 > 1e-9)) o.fail("pants_height(l,2) - l min " + std::to_string(min_lem1));
  if (!(min_lem2 > 1e-9)) o.fail("equilateral height - l/2 min " + std::to_string(min_lem2));
  const double k = hyperbolic::quasi_constant(std::numbers::pi / 2);
  const double below = hyperbolic::quasi_constant(std::nextafter(std::numbers::pi / 2, 0.0));
  const double above = hyperbolic::quasi_constant(std::nextafter(std::numbers::pi / 2, 4.0));
  if (std::abs(k - 2) > 1e-12 || std::abs(below - 2) > 1e-12 || std::abs(above - 2) > 1e-12) {
    o.fail("k(alpha) not continuous at pi/2");
  }
  double min_ratio = 1e300;
  for (double alpha : {0.05, 0.3, 0.7, 1.2, std::numbers::pi / 2, 1.9, 2.5, 3.0, 3.1}) {
    const auto r = hyperbolic::twoseg_quasi_check(2.0, 3.0, alpha, 10000, 2024);
    min_ratio = std::min({min_ratio, r.min_euclidean_ratio, r.min_hyperbolic_ratio});
  }
  if (!(min_ratio >= 1 - 1e-9)) o.fail("two-segment ratio " + std::to_string(min_ratio));
  if (o.pass) {
    o.detail << "min margins: lem1 " << min_lem1 << ", lem2 " << min_lem2 << "; k(pi/2)=" << k
             << "; two-segment min ratio " << min_ratio;
  }
  return o;
}

Outcome euler_bookkeeping() {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& entry : corpus()) {
    ++graphs;
    const auto r = ribbon_genus(entry.graph);
    if (r.chi + static_cast<long>(r.boundary_count) != 2 * static_cast<long>(r.components) - 2 * r.genus) {
      o.fail("ribbon genus identity on " + entry.name);
    }
    if (!four_regular(entry.graph)) continue;
    const auto ribbon = intersection_graph(entry.graph);
    const auto t = trace_faces(ribbon);
    for (const auto& c : t.components) {
      if (static_cast<long>(c.vertices.size()) - static_cast<long>(c.edges) + static_cast<long>(c.faces) !=
          2 - 2 * c.genus) {
        o.fail("face trace identity on " + entry.name);
      }
    }
    std::size_t total = 0;
    for (const auto& f : face_nonstandard_cycles(entry.graph, ribbon)) total += f.edges.size();
    if (total != entry.graph.edge_count()) o.fail("face cycle edges != E on " + entry.name);
  }
  if (o.pass) o.detail << graphs << " corpus graphs; V-E+F = 2-2g per component; face cycle edges sum to E";
  return o;
}

Outcome monotonicity() {
  Outcome o;
  std::mt19937_64 rng(90210);
  std::vector<FatGraph> admissible;
  for (const auto& entry : corpus(false)) {
    if (check_admissibility(entry.graph).admissible()) admissible.push_back(entry.graph);
  }
  std::size_t mutated = 0, deletions = 0, attempts = 0;
  while (mutated < 50 && attempts < 5000) {
    ++attempts;
    FatGraph g;
    switch (rng() % 4) {
      case 0:
      case 1:
        g = relabel(admissible[rng() % admissible.size()], rng);
        break;
      case 2: {
        const auto& base = admissible[rng() % admissible.size()];
        const auto n = standard_cycles(base).size();
        if (n < 2) continue;
        g = relabel(delete_standard_cycles(base, {static_cast<int>(rng() % n)}), rng);
        break;
      }
      default:
        g = random_fatgraph(rng, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 6), rng() % 2 == 0);
        break;
    }
    if (!check_admissibility(g).admissible()) continue;
    const auto n = static_cast<int>(standard_cycles(g).size());
    if (n < 2) continue;
    ++mutated;
    for (int c = 0; c < n; ++c) {
      ++deletions;
      if (!check_admissibility(delete_standard_cycles(g, {c})).admissible()) {
        o.fail("deletion of cycle " + std::to_string(c) + " lost admissibility");
      }
    }
  }
  if (mutated < 50) o.fail("only " + std::to_string(mutated) + " admissible mutations found");
  if (o.pass) o.detail << mutated << " mutated admissible graphs, " << deletions << " single deletions all Admissible";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"family verdicts", family_verdicts},
      {"obstruction agreement", obstruction_agreement},
      {"printed witnesses verify exactly", printed_witnesses},
      {"printed G_n^1 metric discrepancy", documented_discrepancy},
      {"cycle oracle equivalence", cycle_oracle},
      {"girth constructions", girth_constructions},
      {"hyperbolic inequality suites", hyperbolic_suites},
      {"Euler bookkeeping", euler_bookkeeping},
      {"deletion monotonicity", monotonicity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail.str() << std::endl;
  }
  return failures;
}
