#include "fatsys/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>

namespace fatsys::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(std::string_view s, std::string_view separators) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (separators.find(c) != std::string_view::npos) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<Line> lines_of(std::string_view text, std::string_view separators = " \t\r") {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++number;
    auto body = text.substr(start, end - start);
    // a comment starts at a '#' that begins a token
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '#' && (i == 0 || separators.find(body[i - 1]) != std::string_view::npos)) {
        body = body.substr(0, i);
        break;
      }
    }
    auto tokens = split(body, separators);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

int parse_int(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      s.size() > 9) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
  }
  return std::stoi(s);
}

std::pair<std::string, int> parse_slot_ref(const std::string& s, std::size_t line) {
  const auto dot = s.rfind('.');
  if (dot == std::string::npos || dot == 0) throw ParseError(line, "expected <node>.<slot>, got '" + s + "'");
  return {s.substr(0, dot), parse_int(s.substr(dot + 1), line, "slot index")};
}

FatGraph parse_format_a(const std::vector<Line>& lines) {
  struct NodeDecl {
    std::size_t line;
    int valence;
  };
  std::vector<std::string> order;
  std::map<std::string, NodeDecl> decls;
  std::vector<std::string> circles;
  std::vector<std::pair<std::size_t, std::pair<std::pair<std::string, int>, std::pair<std::string, int>>>> edges;

  for (const auto& ln : lines) {
    const auto& t = ln.tokens;
    if (t[0] == "node") {
      if (t.size() != 3) throw ParseError(ln.number, "expected: node <name> <valence>");
      if (decls.count(t[1])) throw ParseError(ln.number, "node '" + t[1] + "' declared twice");
      decls[t[1]] = {ln.number, parse_int(t[2], ln.number, "valence")};
      order.push_back(t[1]);
    } else if (t[0] == "edge") {
      if (t.size() != 3) throw ParseError(ln.number, "expected: edge <a>.<slot> <b>.<slot>");
      edges.push_back({ln.number, {parse_slot_ref(t[1], ln.number), parse_slot_ref(t[2], ln.number)}});
    } else if (t[0] == "circle") {
      if (t.size() != 2) throw ParseError(ln.number, "expected: circle <name>");
      circles.push_back(t[1]);
    } else {
      throw ParseError(ln.number, "unknown directive '" + t[0] + "'");
    }
  }

  FatGraphBuilder builder;
  std::map<std::string, NodeId> ids;
  std::map<std::string, std::vector<char>> used;
  for (const auto& name : order) {
    ids[name] = builder.add_node(name, decls[name].valence);
    used[name].assign(decls[name].valence, 0);
  }
  for (const auto& [line, ends] : edges) {
    for (const auto& [name, slot] : {ends.first, ends.second}) {
      auto it = used.find(name);
      if (it == used.end()) throw ParseError(line, "edge references undeclared node '" + name + "'");
      if (slot >= static_cast<int>(it->second.size())) {
        throw ParseError(line, "slot " + std::to_string(slot) + " out of range at node '" + name + "'");
      }
      if (it->second[slot]) throw ParseError(line, "slot " + name + "." + std::to_string(slot) + " used twice");
      it->second[slot] = 1;
    }
    builder.connect(ids[ends.first.first], ends.first.second, ids[ends.second.first], ends.second.second);
  }
  for (const auto& name : order) {
    const auto& u = used[name];
    const auto gap = std::find(u.begin(), u.end(), 0);
    if (gap != u.end()) {
      throw DanglingSlot(decls[name].line,
                         "slot " + name + "." + std::to_string(gap - u.begin()) + " has no edge");
    }
  }
  for (const auto& c : circles) builder.add_circle(c);
  return builder.build();
}

FatGraph parse_format_b(std::string_view text) {
  // re-split rot lines treating commas and brackets as whitespace
  const auto lines = lines_of(text, " \t\r,[]{}");
  std::vector<RotationEntry> rotations;
  std::vector<std::string> circles;
  std::map<std::string, std::size_t> line_of;
  for (const auto& ln : lines) {
    auto t = ln.tokens;
    if (t[0] == "circle") {
      if (t.size() != 2) throw ParseError(ln.number, "expected: circle <name>");
      circles.push_back(t[1]);
      continue;
    }
    if (t[0] != "rot") throw ParseError(ln.number, "cannot mix '" + t[0] + "' with rot lines");
    std::vector<std::string> rest(t.begin() + 1, t.end());
    // split "name:" / "name:nbr" / "name" ":"
    std::vector<std::string> parts;
    for (const auto& tok : rest) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        parts.push_back(tok);
        continue;
      }
      if (colon > 0) parts.push_back(tok.substr(0, colon));
      parts.push_back(":");
      if (colon + 1 < tok.size()) parts.push_back(tok.substr(colon + 1));
    }
    if (parts.size() < 2 || parts[1] != ":") throw ParseError(ln.number, "expected: rot <name>: <nbr> ...");
    RotationEntry entry{parts[0], {parts.begin() + 2, parts.end()}};
    if (line_of.count(entry.node)) throw ParseError(ln.number, "node '" + entry.node + "' listed twice");
    line_of[entry.node] = ln.number;
    rotations.push_back(std::move(entry));
  }

  std::map<std::pair<std::string, std::string>, std::size_t> mentions;
  for (const auto& r : rotations) {
    for (const auto& nb : r.neighbours) {
      if (!line_of.count(nb)) {
        throw ParseError(line_of[r.node], "node '" + r.node + "' lists unknown neighbour '" + nb + "'");
      }
      ++mentions[{r.node, nb}];
    }
  }
  for (const auto& [key, count] : mentions) {
    const auto& [a, b] = key;
    if (a == b) {
      if (count % 2) throw MismatchedOccurrenceCounts(line_of[a], "node '" + a + "' mentions itself an odd number of times");
      continue;
    }
    const auto back = mentions.find({b, a});
    const std::size_t other = back == mentions.end() ? 0 : back->second;
    if (other != count) {
      throw MismatchedOccurrenceCounts(line_of[a], "'" + a + "' mentions '" + b + "' " + std::to_string(count) +
                                                       " times but '" + b + "' mentions '" + a + "' " +
                                                       std::to_string(other) + " times");
    }
  }
  return FatGraph::from_rotations(rotations, std::move(circles));
}

}  // namespace

FatGraph parse_fatgraph(std::string_view text) {
  const auto lines = lines_of(text);
  const bool rotation_format =
      std::any_of(lines.begin(), lines.end(), [](const Line& l) { return l.tokens[0] == "rot"; });
  if (rotation_format) return parse_format_b(text);
  return parse_format_a(lines);
}

std::string serialize_fatgraph(const FatGraph& graph) {
  std::ostringstream os;
  for (const auto& node : graph.nodes()) os << "node " << node.name << ' ' << node.valence << '\n';
  for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edge_count()); ++e) {
    const auto [a, b] = graph.edge_half_edges(e);
    os << "edge " << graph.nodes()[graph.node_of(a)].name << '.' << graph.slot_of(a) << ' '
       << graph.nodes()[graph.node_of(b)].name << '.' << graph.slot_of(b) << '\n';
  }
  for (const auto& c : graph.circles()) os << "circle " << c << '\n';
  return os.str();
}

std::string serialize_rotations(const FatGraph& graph) {
  std::ostringstream os;
  for (NodeId v = 0; v < static_cast<NodeId>(graph.node_count()); ++v) {
    os << "rot " << graph.nodes()[v].name << ':';
    for (HalfEdgeId h : graph.rotation(v)) {
      if (h < 0) continue;
      os << ' ' << graph.nodes()[graph.node_of(graph.partner(h))].name;
    }
    os << '\n';
  }
  for (const auto& c : graph.circles()) os << "circle " << c << '\n';
  return os.str();
}

MetricSpec parse_metric(std::string_view text) {
  MetricSpec spec;
  for (const auto& ln : lines_of(text)) {
    const auto& t = ln.tokens;
    if (t[0] != "len" || t.size() != 3) throw ParseError(ln.number, "expected: len <edge> <p/q>");
    MetricEntry entry;
    entry.line = ln.number;
    try {
      entry.value = parse_rational(t[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln.number, e.what());
    }
    if (sgn(entry.value) <= 0) {
      throw NonPositiveLength(ln.number, "length " + t[2] + " is not positive");
    }
    const std::string& ref = t[1];
    if (const auto dash = ref.find('-'); dash != std::string::npos) {
      entry.target = MetricEntry::Target::NodePair;
      entry.a = ref.substr(0, dash);
      std::string b = ref.substr(dash + 1);
      if (const auto hash = b.find('#'); hash != std::string::npos) {
        entry.parallel = parse_int(b.substr(hash + 1), ln.number, "parallel edge index");
        if (*entry.parallel < 1) throw ParseError(ln.number, "parallel edge index starts at 1");
        b = b.substr(0, hash);
      }
      entry.b = b;
      if (entry.a.empty() || entry.b.empty()) throw ParseError(ln.number, "malformed edge '" + ref + "'");
    } else if (ref.find('.') != std::string::npos) {
      entry.target = MetricEntry::Target::HalfEdge;
      std::tie(entry.a, entry.slot) = parse_slot_ref(ref, ln.number);
    } else {
      entry.target = MetricEntry::Target::Circle;
      entry.a = ref;
    }
    spec.entries.push_back(std::move(entry));
  }
  return spec;
}

MetricAssignment resolve_metric(const FatGraph& graph, const MetricSpec& spec) {
  std::vector<std::optional<Rational>> edges(graph.edge_count());
  std::vector<std::optional<Rational>> circles(graph.circle_count());
  auto assign = [](std::optional<Rational>& slot, const Rational& value, std::size_t line) {
    if (slot && *slot != value) throw ParseError(line, "conflicting lengths for the same edge");
    slot = value;
  };

  for (const auto& entry : spec.entries) {
    switch (entry.target) {
      case MetricEntry::Target::Circle: {
        const auto c = graph.find_circle(entry.a);
        if (!c) throw ParseError(entry.line, "unknown circle '" + entry.a + "'");
        assign(circles[*c], entry.value, entry.line);
        break;
      }
      case MetricEntry::Target::HalfEdge: {
        const auto v = graph.find_node(entry.a);
        if (!v || entry.slot >= graph.valence(*v)) {
          throw ParseError(entry.line, "unknown half-edge '" + entry.a + "." + std::to_string(entry.slot) + "'");
        }
        const HalfEdgeId h = graph.at(*v, entry.slot);
        if (h < 0 || graph.edge_of(h) < 0) throw ParseError(entry.line, "half-edge is not part of an edge");
        assign(edges[graph.edge_of(h)], entry.value, entry.line);
        break;
      }
      case MetricEntry::Target::NodePair: {
        const auto a = graph.find_node(entry.a);
        const auto b = graph.find_node(entry.b);
        if (!a || !b) throw ParseError(entry.line, "unknown node in '" + entry.a + "-" + entry.b + "'");
        std::vector<EdgeId> matches;
        for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edge_count()); ++e) {
          const auto [x, y] = graph.edge_nodes(e);
          if ((x == *a && y == *b) || (x == *b && y == *a)) matches.push_back(e);
        }
        if (matches.empty()) throw ParseError(entry.line, "no edge between '" + entry.a + "' and '" + entry.b + "'");
        if (entry.parallel) {
          if (static_cast<std::size_t>(*entry.parallel) > matches.size()) {
            throw ParseError(entry.line, "only " + std::to_string(matches.size()) + " edges between '" + entry.a +
                                             "' and '" + entry.b + "'");
          }
          assign(edges[matches[*entry.parallel - 1]], entry.value, entry.line);
        } else {
          for (EdgeId e : matches) assign(edges[e], entry.value, entry.line);
        }
        break;
      }
    }
  }

  MetricAssignment metric;
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    if (!edges[e]) throw MissingLength("no length for edge " + graph.edge_label(e));
    metric.edge_lengths.push_back(*edges[e]);
  }
  for (std::size_t c = 0; c < circles.size(); ++c) {
    if (!circles[c]) throw MissingLength("no length for circle " + graph.circles()[c]);
    metric.circle_lengths.push_back(*circles[c]);
  }
  return metric;
}

std::string serialize_metric(const FatGraph& graph, const MetricAssignment& metric) {
  std::ostringstream os;
  for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edge_count()); ++e) {
    const HalfEdgeId h = graph.edge_half_edges(e).first;
    os << "len " << graph.nodes()[graph.node_of(h)].name << '.' << graph.slot_of(h) << ' '
       << to_fraction_string(metric.edge_lengths.at(e)) << '\n';
  }
  for (std::size_t c = 0; c < graph.circle_count(); ++c) {
    os << "len " << graph.circles()[c] << ' ' << to_fraction_string(metric.circle_lengths.at(c)) << '\n';
  }
  return os.str();
}

PlainGraph parse_plain_graph(std::string_view text) {
  PlainGraph g;
  std::map<std::string, int> ids;
  auto vertex = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    const int id = g.add_vertex(name);
    ids[name] = id;
    return id;
  };
  for (const auto& ln : lines_of(text)) {
    const auto& t = ln.tokens;
    if (t[0] == "edge" && t.size() == 3) {
      const int a = vertex(t[1]);
      const int b = vertex(t[2]);
      g.add_edge(a, b);
    } else if (t[0] == "vertex" && t.size() == 2) {
      vertex(t[1]);
    } else {
      throw ParseError(ln.number, "expected: edge <a> <b> | vertex <name>");
    }
  }
  return g;
}

std::string serialize_plain_graph(const PlainGraph& graph) {
  std::ostringstream os;
  for (const auto& name : graph.names) os << "vertex " << name << '\n';
  for (const auto& [a, b] : graph.edges) os << "edge " << graph.names[a] << ' ' << graph.names[b] << '\n';
  return os.str();
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace fatsys::io
