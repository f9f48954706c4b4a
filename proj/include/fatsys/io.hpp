#pragma once

#include "fatsys/admissibility.hpp"
#include "fatsys/errors.hpp"
#include "fatsys/fatgraph.hpp"
#include "fatsys/generators.hpp"
#include "fatsys/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fatsys::io {

struct DanglingSlot : ParseError {
  using ParseError::ParseError;
};

struct MismatchedOccurrenceCounts : ParseError {
  using ParseError::ParseError;
};

struct NonPositiveLength : ParseError {
  using ParseError::ParseError;
};

/// Format A:  node <name> <valence> / edge <a>.<slot> <b>.<slot> / circle <name>
/// Format B:  rot <name>: <nbr> <nbr> ...  (occurrence-order pairing)
/// '#' starts a comment; blank lines are ignored.
FatGraph parse_fatgraph(std::string_view text);

/// Format A, nodes in id order, edges in edge-id order.
std::string serialize_fatgraph(const FatGraph& graph);

/// Format B; only for graphs whose pairing matches occurrence order.
std::string serialize_rotations(const FatGraph& graph);

struct MetricEntry {
  enum class Target { HalfEdge, NodePair, Circle };
  std::size_t line = 0;
  Target target = Target::NodePair;
  std::string a;
  std::string b;
  int slot = 0;                 // HalfEdge
  std::optional<int> parallel;  // NodePair: 1-based index among parallel edges
  Rational value;
};

/// Lines: len <name>.<slot> <p/q> | len <a>-<b>[#k] <p/q> | len <circle> <p/q>
struct MetricSpec {
  std::vector<MetricEntry> entries;
};

MetricSpec parse_metric(std::string_view text);

/// Binds a metric file to a graph. `a-b` without #k sets every parallel
/// edge between a and b. Unknown references raise ParseError at the
/// entry's line; uncovered edges raise MissingLength.
MetricAssignment resolve_metric(const FatGraph& graph, const MetricSpec& spec);

/// One `len a.s p/q` line per edge plus one per circle.
std::string serialize_metric(const FatGraph& graph, const MetricAssignment& metric);

/// Lines: edge <a> <b> | vertex <name>
PlainGraph parse_plain_graph(std::string_view text);
std::string serialize_plain_graph(const PlainGraph& graph);

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace fatsys::io
