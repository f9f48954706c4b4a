#pragma once

#include "fatsys/admissibility.hpp"
#include "fatsys/fatgraph.hpp"
#include "fatsys/generators.hpp"
#include "fatsys/hyperbolic.hpp"
#include "fatsys/topology.hpp"

#include <json.hpp>

#include <string>

namespace fatsys::report {

using Json = nlohmann::ordered_json;

struct ReportDocument {
  std::string command;
  Json input_sha;  // string, or null when there is no input file
  Json result = Json::object();
  Json witness;
  Json certificate;
  Json diagnostics = Json::array();

  Json to_json() const;
};

std::string render_json(const ReportDocument& doc);
/// Same content as the JSON, as indented `key: value` lines.
std::string render_text(const ReportDocument& doc);

/// {"edges": {label: "p/q"}, "circles": {name: "p/q"}}
Json metric_json(const FatGraph& graph, const MetricAssignment& metric);
Json verdict_json(const AdmissibilityVerdict& verdict);
Json edge_labels(const FatGraph& graph, const std::vector<EdgeId>& edges);

void fill_check(ReportDocument& doc, const FatGraph& graph, const AdmissibilityVerdict& verdict);
void fill_verify(ReportDocument& doc, const FatGraph& graph, const VerificationReport& report);
void fill_minimal(ReportDocument& doc, const FatGraph& graph, const MinimalityReport& report);
void fill_obstruction(ReportDocument& doc, const FatGraph& graph);
void fill_genus(ReportDocument& doc, const FatGraph& graph);
void fill_girth(ReportDocument& doc, const PlainGraph& graph);
void fill_cap_plan(ReportDocument& doc, const hyperbolic::CappingPlan& plan);

}  // namespace fatsys::report
