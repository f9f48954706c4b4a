#include "fatsys/report.hpp"

#include "fatsys/errors.hpp"
#include "fatsys/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fatsys::report {

Json ReportDocument::to_json() const {
  Json j;
  j["command"] = command;
  j["input_sha"] = input_sha;
  j["result"] = result;
  j["witness"] = witness;
  j["certificate"] = certificate;
  j["diagnostics"] = diagnostics;
  return j;
}

std::string render_json(const ReportDocument& doc) { return doc.to_json().dump(2) + "\n"; }

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        os << pad << key << ": " << scalar_text(value) << '\n';
      } else if (value.empty()) {
        os << pad << key << ": " << (value.is_array() ? "[]" : "{}") << '\n';
      } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
        os << pad << key << ':';
        for (const auto& v : value) os << ' ' << scalar_text(v);
        os << '\n';
      } else {
        os << pad << key << ":\n";
        render(os, value, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        os << pad << "- " << scalar_text(item) << '\n';
      } else {
        os << pad << "-\n";
        render(os, item, depth + 1);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

Json fraction(const Rational& q) { return to_fraction_string(q); }

}  // namespace

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  Json j = doc.to_json();
  // null sections carry no information in text form
  for (const char* key : {"witness", "certificate"}) {
    if (j[key].is_null()) j.erase(key);
  }
  if (j["diagnostics"].empty()) j.erase("diagnostics");
  render(os, j, 0);
  return os.str();
}

Json edge_labels(const FatGraph& graph, const std::vector<EdgeId>& edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back(graph.edge_label(e));
  return out;
}

Json metric_json(const FatGraph& graph, const MetricAssignment& metric) {
  Json edges = Json::object();
  for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edge_count()); ++e) {
    edges[graph.edge_label(e)] = fraction(metric.edge_lengths.at(e));
  }
  Json circles = Json::object();
  for (std::size_t c = 0; c < graph.circle_count(); ++c) {
    circles[graph.circles()[c]] = fraction(metric.circle_lengths.at(c));
  }
  Json j;
  j["edges"] = edges;
  j["circles"] = circles;
  return j;
}

Json verdict_json(const AdmissibilityVerdict& verdict) {
  Json j;
  j["status"] = std::string(to_string(verdict.status));
  j["margin"] = fraction(verdict.margin);
  j["constraint_counts"] = {{"standard", verdict.counts.standard},
                            {"non_standard", verdict.counts.non_standard},
                            {"edges", verdict.counts.edges}};
  j["lp"] = {{"cuts", verdict.cuts}, {"rounds", verdict.rounds}};
  return j;
}

void fill_check(ReportDocument& doc, const FatGraph& graph, const AdmissibilityVerdict& verdict) {
  doc.result = verdict_json(verdict);
  doc.witness = verdict.witness ? metric_json(graph, *verdict.witness) : Json();
}

void fill_verify(ReportDocument& doc, const FatGraph& graph, const VerificationReport& report) {
  const auto cycles = standard_cycles(graph);
  Json standard = Json::array();
  for (const auto& s : report.standard) {
    Json entry;
    entry["cycle"] = s.cycle_id;
    if (cycles[s.cycle_id].is_circle()) {
      entry["circle"] = graph.circles()[*cycles[s.cycle_id].circle];
    } else {
      entry["edges"] = edge_labels(graph, cycles[s.cycle_id].edges);
    }
    entry["sum"] = fraction(s.sum);
    entry["deviation"] = fraction(s.deviation);
    standard.push_back(entry);
  }
  doc.result["pass"] = report.pass;
  doc.result["systole"] = fraction(report.systole);
  doc.result["standard"] = standard;
  doc.result["non_standard_count"] = report.non_standard_count;
  doc.result["min_slack"] = report.min_slack ? fraction(*report.min_slack) : Json();
  if (report.tightest) {
    doc.result["tightest"] = {{"edges", edge_labels(graph, report.tightest->edges)}};
  } else {
    doc.result["tightest"] = nullptr;
  }
  for (const auto& p : report.problems) doc.diagnostics.push_back(p);
}

void fill_minimal(ReportDocument& doc, const FatGraph& graph, const MinimalityReport& report) {
  const auto cycles = standard_cycles(graph);
  std::string classification = "NotMinimal";
  if (report.full.admissible()) classification = "Admissible";
  if (report.minimal_non_admissible) classification = "MinimalNonAdmissible";
  doc.result["classification"] = classification;
  doc.result["full"] = verdict_json(report.full);
  Json deletions = Json::array();
  Json witnesses = Json::array();
  for (const auto& d : report.deletions) {
    Json entry;
    entry["cycle"] = d.cycle_id;
    entry["deleted_edges"] = edge_labels(graph, cycles[d.cycle_id].edges);
    entry["status"] = std::string(to_string(d.verdict.status));
    entry["margin"] = fraction(d.verdict.margin);
    entry["nodes"] = d.nodes;
    entry["edges"] = d.edges;
    entry["circles"] = d.circles;
    deletions.push_back(entry);
    if (d.verdict.witness) {
      const auto sub = delete_standard_cycles(graph, {d.cycle_id});
      witnesses.push_back({{"cycle", d.cycle_id}, {"metric", metric_json(sub, *d.verdict.witness)}});
    }
  }
  doc.result["deletions"] = deletions;
  doc.witness = report.full.witness ? metric_json(graph, *report.full.witness) : witnesses;
}

void fill_obstruction(ReportDocument& doc, const FatGraph& graph) {
  std::optional<ObstructionCertificate> cert;
  try {
    cert = vf_obstruction(graph);
  } catch (const NotFourRegular& e) {
    doc.result["status"] = "inconclusive";
    doc.diagnostics.push_back(e.what());
    return;
  }
  if (!cert) {
    doc.result["status"] = "inconclusive";
    doc.diagnostics.push_back("no genus-0 orientation of the intersection graph with f >= v");
    return;
  }
  doc.result["status"] = "obstructed";
  doc.result["v"] = cert->v;
  doc.result["e"] = cert->e;
  doc.result["f"] = cert->f;
  Json faces = Json::array();
  for (const auto& fc : cert->face_cycles) {
    Json entry;
    entry["face"] = fc.face;
    entry["edges"] = edge_labels(graph, fc.edges);
    entry["simple"] = fc.simple;
    entry["kind"] = fc.kind ? (*fc.kind == CycleKind::Standard ? "standard" : "non-standard") : Json();
    faces.push_back(entry);
  }
  doc.certificate["v"] = cert->v;
  doc.certificate["e"] = cert->e;
  doc.certificate["f"] = cert->f;
  doc.certificate["lambda"] = fraction(cert->lambda);
  doc.certificate["mu"] = fraction(cert->mu);
  doc.certificate["reflected_vertices"] = cert->reflected_vertices;
  doc.certificate["face_cycles"] = faces;
}

void fill_genus(ReportDocument& doc, const FatGraph& graph) {
  const auto report = min_genus_report(graph);
  doc.result["boundary_count"] = report.genus.boundary_count;
  doc.result["genus"] = report.genus.genus;
  doc.result["chi"] = report.genus.chi;
  doc.result["components"] = report.genus.components;
  doc.result["min_genus"] = report.min_genus;
  doc.result["statement"] = report.statement;
}

void fill_girth(ReportDocument& doc, const PlainGraph& graph) {
  const auto deg = graph.degrees();
  doc.result["vertices"] = graph.vertex_count();
  doc.result["edges"] = graph.edges.size();
  const auto g = girth(graph);
  doc.result["girth"] = g ? Json(*g) : Json();
  std::map<int, std::size_t> histogram;
  for (int d : deg) ++histogram[d];
  Json degrees = Json::object();
  for (const auto& [d, count] : histogram) degrees[std::to_string(d)] = count;
  doc.result["degree_histogram"] = degrees;
}

void fill_cap_plan(ReportDocument& doc, const hyperbolic::CappingPlan& plan) {
  Json entries = Json::array();
  for (const auto& e : plan.entries) {
    Json j;
    j["l"] = e.l;
    j["gap"] = e.gap;
    j["branch_distance"] = e.branch_distance;
    j["branch_height"] = e.branch_height;
    j["girth_required"] = e.girth_required;
    j["girth_used"] = e.girth_used;
    j["vertex_count"] = e.vertex_count;
    j["girth_measured"] = e.girth_measured ? Json(*e.girth_measured) : Json();
    j["pants"] = {{"terminal", e.pants.terminal}, {"interior", e.pants.interior}};
    entries.push_back(j);
  }
  doc.result["surfaces"] = entries;
}

}  // namespace fatsys::report
