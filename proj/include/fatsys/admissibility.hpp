#pragma once

#include "fatsys/cycles.hpp"
#include "fatsys/fatgraph.hpp"
#include "fatsys/lp.hpp"
#include "fatsys/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fatsys {

/// Length per edge (indexed by edge id) and per circle component.
struct MetricAssignment {
  std::vector<Rational> edge_lengths;
  std::vector<Rational> circle_lengths;
};

/// Sum of lengths along a standard cycle or simple cycle.
Rational cycle_length(const MetricAssignment& metric, const StandardCycle& cycle);
Rational cycle_length(const MetricAssignment& metric, const SimpleCycle& cycle);

/// Pulls a metric back through a deletion: each derived edge gets the sum
/// of the source edges it concatenates.
MetricAssignment restrict_metric(const MetricAssignment& metric, const DeletionResult& deletion);

enum class AdmissibilityStatus { Admissible, NotAdmissible };

std::string_view to_string(AdmissibilityStatus status);

struct ConstraintCounts {
  std::size_t standard = 0;
  std::size_t non_standard = 0;
  std::size_t edges = 0;
};

struct AdmissibilityVerdict {
  AdmissibilityStatus status = AdmissibilityStatus::NotAdmissible;
  /// Optimal strictness slack t*: standard cycles sum to 1, other simple
  /// cycles to at least 1 + t*, every length at least t*.
  Rational margin;
  /// Optimal lengths; present iff admissible.
  std::optional<MetricAssignment> witness;
  ConstraintCounts counts;
  /// Non-standard constraints that were active in the final program.
  std::size_t cuts = 0;
  std::size_t rounds = 0;

  bool admissible() const { return status == AdmissibilityStatus::Admissible; }
};

/// Decides combinatorial admissibility exactly. Non-standard cycle
/// constraints are added lazily, most violated first, until the optimum
/// of the restricted program satisfies all of them; the result is the
/// optimum of the full program.
AdmissibilityVerdict check_admissibility(const FatGraph& graph, std::size_t cap = kDefaultCycleCap);

/// Same, over an already enumerated cycle list.
AdmissibilityVerdict check_admissibility(const FatGraph& graph, const std::vector<SimpleCycle>& cycles);

struct StandardSum {
  int cycle_id = 0;
  Rational sum;
  Rational deviation;  // sum - systole
};

struct VerificationReport {
  bool pass = false;
  Rational systole;
  std::vector<StandardSum> standard;
  std::size_t non_standard_count = 0;
  /// min over non-standard simple cycles of (length - systole).
  std::optional<Rational> min_slack;
  std::optional<SimpleCycle> tightest;
  std::vector<std::string> problems;
};

/// Throws MissingLength if the metric does not cover every edge and circle.
void require_complete(const FatGraph& graph, const MetricAssignment& metric);

/// Exact check that every standard cycle has length `systole` and every
/// non-standard simple cycle is strictly longer.
VerificationReport verify_metric(const FatGraph& graph, const MetricAssignment& metric,
                                 std::size_t cap = kDefaultCycleCap, const Rational& systole = Rational(1));

struct DeletionCheck {
  int cycle_id = 0;
  AdmissibilityVerdict verdict;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t circles = 0;
};

struct MinimalityReport {
  AdmissibilityVerdict full;
  std::vector<DeletionCheck> deletions;
  bool minimal_non_admissible = false;
};

/// Checks the graph and every single-standard-cycle deletion (in parallel).
/// With a single standard cycle only the full verdict is reported.
MinimalityReport check_minimality(const FatGraph& graph, std::size_t cap = kDefaultCycleCap);

}  // namespace fatsys
