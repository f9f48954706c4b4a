#include "fatsys/admissibility.hpp"

#include "fatsys/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <set>

namespace fatsys {

std::string_view to_string(AdmissibilityStatus status) {
  return status == AdmissibilityStatus::Admissible ? "Admissible" : "NotAdmissible";
}

Rational cycle_length(const MetricAssignment& metric, const StandardCycle& cycle) {
  if (cycle.is_circle()) return metric.circle_lengths.at(*cycle.circle);
  Rational sum = 0;
  for (EdgeId e : cycle.edges) sum += metric.edge_lengths.at(e);
  return sum;
}

Rational cycle_length(const MetricAssignment& metric, const SimpleCycle& cycle) {
  if (cycle.circle) return metric.circle_lengths.at(*cycle.circle);
  Rational sum = 0;
  for (EdgeId e : cycle.edges) sum += metric.edge_lengths.at(e);
  return sum;
}

MetricAssignment restrict_metric(const MetricAssignment& metric, const DeletionResult& deletion) {
  auto length_of = [&](const LengthOrigin& origin) {
    if (origin.circle) return metric.circle_lengths.at(*origin.circle);
    Rational sum = 0;
    for (EdgeId e : origin.edges) sum += metric.edge_lengths.at(e);
    return sum;
  };
  MetricAssignment out;
  for (const auto& o : deletion.edge_origin) out.edge_lengths.push_back(length_of(o));
  for (const auto& o : deletion.circle_origin) out.circle_lengths.push_back(length_of(o));
  return out;
}

namespace {

// Exact slack evaluation: lengths scaled to a common denominator so that
// cycle sums run in machine integers when they fit.
class SlackEvaluator {
 public:
  SlackEvaluator(const std::vector<Rational>& lengths, const Rational& offset, std::size_t max_len)
      : lengths_(lengths), offset_(offset) {
    mpz_class den = offset.get_den();
    for (const auto& x : lengths) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    den_ = den;
    mpz_class bound = abs(Rational(offset * den).get_num());
    for (const auto& x : lengths) {
      mpz_class v = abs(Rational(x * den).get_num());
      if (v > bound) bound = v;
    }
    // every partial sum stays below 2^62
    mpz_class limit = mpz_class(1) << 62;
    fast_ = bound * (static_cast<long>(max_len) + 2) < limit;
    if (fast_) {
      for (const auto& x : lengths) scaled_.push_back(Rational(x * den).get_num().get_si());
      scaled_offset_ = Rational(offset * den).get_num().get_si();
    }
  }

  // sign and ordering key of sum(edges) - offset
  std::int64_t scaled_slack(const std::vector<EdgeId>& edges) const {
    std::int64_t s = -scaled_offset_;
    for (EdgeId e : edges) s += scaled_[e];
    return s;
  }

  Rational slack(const std::vector<EdgeId>& edges) const {
    if (fast_) return Rational(mpz_class(scaled_slack(edges)), den_);
    Rational s = -offset_;
    for (EdgeId e : edges) s += lengths_[e];
    return s;
  }

  bool fast() const { return fast_; }

 private:
  const std::vector<Rational>& lengths_;
  Rational offset_;
  mpz_class den_;
  bool fast_ = false;
  std::vector<std::int64_t> scaled_;
  std::int64_t scaled_offset_ = 0;
};

constexpr std::size_t kCutsPerRound = 16;

}  // namespace

AdmissibilityVerdict check_admissibility(const FatGraph& graph, std::size_t cap) {
  return check_admissibility(graph, enumerate_simple_cycles(graph, cap));
}

AdmissibilityVerdict check_admissibility(const FatGraph& graph, const std::vector<SimpleCycle>& cycles) {
  const auto standard = standard_cycles(graph);
  if (standard.empty()) throw InternalError("graph has no standard cycles; margin is unbounded");

  std::vector<std::size_t> nonstandard;
  std::size_t max_len = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!cycles[i].is_standard()) {
      nonstandard.push_back(i);
      max_len = std::max(max_len, cycles[i].edges.size());
    }
  }

  const std::size_t ne = graph.edge_count();
  const std::size_t nc = graph.circle_count();
  // Variables: s_e >= 0 per edge and circle with length = t + s, and
  // u = 1 - t >= 0 (every length lies on a standard cycle summing to 1).
  const int u = static_cast<int>(ne + nc);
  lp::Program program(ne + nc + 1);
  program.objective[u] = -1;
  for (const auto& c : standard) {
    lp::Constraint row;
    row.relation = lp::Relation::Equal;
    if (c.is_circle()) {
      row.terms = {{static_cast<int>(ne) + *c.circle, Rational(1)}, {u, Rational(-1)}};
      row.rhs = 0;
    } else {
      const auto len = static_cast<long>(c.edges.size());
      for (EdgeId e : c.edges) row.terms.push_back({e, Rational(1)});
      row.terms.push_back({u, Rational(-len)});
      row.rhs = 1 - len;
    }
    program.constraints.push_back(std::move(row));
  }

  AdmissibilityVerdict verdict;
  verdict.counts = {standard.size(), nonstandard.size(), ne};

  std::set<std::size_t> active;
  std::vector<Rational> lengths(ne);
  Rational margin;
  for (;;) {
    ++verdict.rounds;
    const auto sol = lp::solve_feasibility(program);
    margin = 1 - sol.values[u];
    for (std::size_t e = 0; e < ne; ++e) lengths[e] = margin + sol.values[e];

    // A non-standard cycle d needs sum(d) - t - 1 >= 0.
    SlackEvaluator eval(lengths, margin + 1, max_len);
    std::vector<std::pair<Rational, std::size_t>> violated;
    if (eval.fast()) {
      std::vector<std::pair<std::int64_t, std::size_t>> neg;
      for (std::size_t i : nonstandard) {
        const auto s = eval.scaled_slack(cycles[i].edges);
        if (s < 0) neg.emplace_back(s, i);
      }
      std::sort(neg.begin(), neg.end());
      for (std::size_t k = 0; k < neg.size() && k < kCutsPerRound; ++k) {
        violated.emplace_back(Rational(0), neg[k].second);
      }
    } else {
      for (std::size_t i : nonstandard) {
        Rational s = eval.slack(cycles[i].edges);
        if (sgn(s) < 0) violated.emplace_back(std::move(s), i);
      }
      std::sort(violated.begin(), violated.end());
      if (violated.size() > kCutsPerRound) violated.resize(kCutsPerRound);
    }
    if (violated.empty()) break;

    for (const auto& [slack, i] : violated) {
      if (!active.insert(i).second) throw InternalError("active cut reported violated");
      const auto& d = cycles[i];
      const auto len = static_cast<long>(d.edges.size());
      lp::Constraint row;
      row.relation = lp::Relation::GreaterEqual;
      for (EdgeId e : d.edges) row.terms.push_back({e, Rational(1)});
      row.terms.push_back({u, Rational(-(len - 1))});
      row.rhs = 2 - len;
      program.constraints.push_back(std::move(row));
    }
  }

  verdict.margin = margin;
  verdict.cuts = active.size();
  verdict.status = sgn(margin) > 0 ? AdmissibilityStatus::Admissible : AdmissibilityStatus::NotAdmissible;
  if (verdict.admissible()) {
    MetricAssignment w;
    w.edge_lengths = lengths;
    w.circle_lengths.assign(nc, Rational(1));
    verdict.witness = std::move(w);
  }
  return verdict;
}

void require_complete(const FatGraph& graph, const MetricAssignment& metric) {
  if (metric.edge_lengths.size() != graph.edge_count()) {
    throw MissingLength("metric covers " + std::to_string(metric.edge_lengths.size()) + " of " +
                        std::to_string(graph.edge_count()) + " edges");
  }
  if (metric.circle_lengths.size() != graph.circle_count()) {
    throw MissingLength("metric covers " + std::to_string(metric.circle_lengths.size()) + " of " +
                        std::to_string(graph.circle_count()) + " circles");
  }
}

VerificationReport verify_metric(const FatGraph& graph, const MetricAssignment& metric, std::size_t cap,
                                 const Rational& systole) {
  require_complete(graph, metric);
  VerificationReport report;
  report.systole = systole;
  bool ok = true;

  for (std::size_t e = 0; e < metric.edge_lengths.size(); ++e) {
    if (sgn(metric.edge_lengths[e]) <= 0) {
      ok = false;
      report.problems.push_back("edge " + graph.edge_label(static_cast<EdgeId>(e)) + " has non-positive length " +
                                to_fraction_string(metric.edge_lengths[e]));
    }
  }
  for (std::size_t c = 0; c < metric.circle_lengths.size(); ++c) {
    if (sgn(metric.circle_lengths[c]) <= 0) {
      ok = false;
      report.problems.push_back("circle " + graph.circles()[c] + " has non-positive length");
    }
  }

  for (const auto& c : standard_cycles(graph)) {
    StandardSum s{c.id, cycle_length(metric, c), 0};
    s.deviation = s.sum - systole;
    if (sgn(s.deviation) != 0) {
      ok = false;
      report.problems.push_back("standard cycle " + std::to_string(c.id) + " has length " +
                                to_fraction_string(s.sum) + " != " + to_fraction_string(systole));
    }
    report.standard.push_back(std::move(s));
  }

  for (const auto& d : enumerate_simple_cycles(graph, cap)) {
    if (d.is_standard()) continue;
    ++report.non_standard_count;
    Rational slack = cycle_length(metric, d) - systole;
    if (!report.min_slack || slack < *report.min_slack) {
      report.min_slack = slack;
      report.tightest = d;
    }
  }
  if (report.min_slack && sgn(*report.min_slack) <= 0) {
    ok = false;
    report.problems.push_back("non-standard cycle " + report.tightest->canonical_key() + " has length " +
                              to_fraction_string(*report.min_slack + systole) + " <= " +
                              to_fraction_string(systole));
  }
  report.pass = ok;
  return report;
}

MinimalityReport check_minimality(const FatGraph& graph, std::size_t cap) {
  const auto cycles = standard_cycles(graph);
  MinimalityReport report;
  report.full = check_admissibility(graph, cap);
  if (cycles.size() < 2) {
    // a lone standard cycle cannot be deleted; only the admissible case has an answer
    if (report.full.admissible()) return report;
    throw BadParameter("minimality needs at least two standard cycles");
  }
  report.deletions.resize(cycles.size());
  std::vector<std::exception_ptr> errors(cycles.size());

  const auto n = static_cast<int>(cycles.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      const auto sub = delete_standard_cycles(graph, {i});
      auto& d = report.deletions[i];
      d.cycle_id = i;
      d.nodes = sub.node_count();
      d.edges = sub.edge_count();
      d.circles = sub.circle_count();
      d.verdict = check_admissibility(sub, cap);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  report.minimal_non_admissible =
      !report.full.admissible() && std::all_of(report.deletions.begin(), report.deletions.end(),
                                               [](const DeletionCheck& d) { return d.verdict.admissible(); });
  return report;
}

}  // namespace fatsys
