#include "fatsys/admissibility.hpp"
#include "fatsys/errors.hpp"
#include "fatsys/generators.hpp"
#include "fatsys/hyperbolic.hpp"
#include "fatsys/io.hpp"
#include "fatsys/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace fatsys;
using report::ReportDocument;

namespace {

enum Exit { kOk = 0, kParse = 2, kInvalid = 3, kCap = 4, kBadParameter = 5 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParameter("cannot write '" + path + "'");
  out << text;
}

struct Loaded {
  std::string text;
  FatGraph graph;
};

Loaded load_graph(const std::string& path) {
  Loaded l;
  l.text = read_input(path);
  l.graph = io::parse_fatgraph(l.text);
  require_valid(l.graph);
  return l;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw BadParameter("not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw BadParameter("empty length list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial admissibility of decorated fat graphs"};
  app.require_subcommand(1);

  std::string command_echo;
  for (int i = 1; i < argc; ++i) command_echo += (i > 1 ? " " : "") + std::string(argv[i]);

  bool json = false;
  std::size_t cap = kDefaultCycleCap;
  std::string file;
  std::string metric_file;
  std::string systole = "1";
  std::string output;
  std::string format = "slots";
  int n = 0;
  double l = 0;
  double k = 2;
  double alpha = 0;
  bool lem2 = false;
  std::string lengths;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit a JSON report"); };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "input file, '-' for stdin")->required(); };

  auto* check = app.add_subcommand("check", "decide combinatorial admissibility");
  add_file(check);
  check->add_option("--max-cycles", cap, "simple cycle cap")->check(CLI::PositiveNumber);
  check->add_option("--witness-out", output, "write the witness metric file");
  add_json(check);

  auto* verify = app.add_subcommand("verify", "verify a metric exactly");
  add_file(verify);
  verify->add_option("--metric", metric_file, "metric file")->required();
  verify->add_option("--systole", systole, "target systole p/q");
  verify->add_option("--max-cycles", cap, "simple cycle cap")->check(CLI::PositiveNumber);
  add_json(verify);

  auto* minimal = app.add_subcommand("minimal", "decide minimal non-admissibility");
  add_file(minimal);
  minimal->add_option("--max-cycles", cap, "simple cycle cap")->check(CLI::PositiveNumber);
  add_json(minimal);

  auto* obstruction = app.add_subcommand("obstruction", "search for a v <= f certificate");
  add_file(obstruction);
  add_json(obstruction);

  auto* genus = app.add_subcommand("genus", "ribbon genus and minimum genus statement");
  add_file(genus);
  add_json(genus);

  auto* gen = app.add_subcommand("gen", "generate graphs");
  gen->require_subcommand(1);
  auto* gen_wheel = gen->add_subcommand("wheel", "hub cycle with n triangles");
  gen_wheel->add_option("--n", n, "number of triangles")->required();
  auto* gen_g8 = gen->add_subcommand("example-g8", "the 8-node example");
  auto* gen_tri = gen->add_subcommand("trivalent-girth", "trivalent graph of given girth");
  gen_tri->add_option("--girth", n, "girth n0 >= 4")->required();
  auto* gen_uni = gen->add_subcommand("unitrivalent-girth", "uni-trivalent graph of given girth");
  gen_uni->add_option("--girth", n, "girth n0 >= 4")->required();
  for (auto* sub : {gen_wheel, gen_g8, gen_tri, gen_uni}) sub->add_option("-o,--output", output, "output file");
  for (auto* sub : {gen_wheel, gen_g8}) {
    sub->add_option("--format", format, "slots or rot")->check(CLI::IsMember({"slots", "rot"}));
  }

  auto* girth_cmd = app.add_subcommand("girth", "girth of a plain graph");
  add_file(girth_cmd);
  add_json(girth_cmd);

  auto* pants = app.add_subcommand("pants", "pair of pants formulas");
  pants->require_subcommand(1);
  auto* pants_height = pants->add_subcommand("height", "height of P(l, kl, kl)");
  pants_height->add_option("--waist", l, "waist length")->required();
  pants_height->add_option("--k", k, "multiplier");
  pants_height->add_flag("--lem2", lem2, "equilateral cosh variant");
  auto* pants_distance = pants->add_subcommand("distance", "boundary distance in P(l, l, l)");
  pants_distance->add_option("--l", l, "boundary length")->required();

  auto* cap_cmd = app.add_subcommand("cap", "capping surfaces");
  cap_cmd->require_subcommand(1);
  auto* cap_gap = cap_cmd->add_subcommand("gap", "length gap a(l)");
  cap_gap->add_option("--l", l, "boundary length")->required();
  auto* cap_girth = cap_cmd->add_subcommand("girth", "required girth t(l)");
  cap_girth->add_option("--l", l, "boundary length")->required();
  auto* cap_plan = cap_cmd->add_subcommand("plan", "capping plan per boundary");
  cap_plan->add_option("--l", lengths, "comma separated boundary lengths")->required();

  auto* quasi = app.add_subcommand("quasi", "quasi-geodesic constants");
  quasi->require_subcommand(1);
  auto* quasi_constant = quasi->add_subcommand("constant", "k(alpha)");
  quasi_constant->add_option("--alpha", alpha, "angle in (0, pi)")->required();

  for (auto* sub : {pants_height, pants_distance, cap_gap, cap_girth, cap_plan, quasi_constant}) add_json(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kBadParameter;
  }

  ReportDocument doc;
  doc.command = command_echo;
  auto emit = [&] { std::cout << (json ? report::render_json(doc) : report::render_text(doc)); };

  try {
    if (check->parsed()) {
      const auto in = load_graph(file);
      doc.input_sha = io::sha256_hex(in.text);
      const auto verdict = check_admissibility(in.graph, cap);
      report::fill_check(doc, in.graph, verdict);
      if (!output.empty() && verdict.witness) write_output(output, io::serialize_metric(in.graph, *verdict.witness));
      emit();
    } else if (verify->parsed()) {
      const auto in = load_graph(file);
      const auto mtext = read_input(metric_file);
      doc.input_sha = io::sha256_hex(in.text + mtext);
      Rational target;
      try {
        target = parse_rational(systole);
      } catch (const std::invalid_argument& e) {
        throw BadParameter(e.what());
      }
      if (sgn(target) <= 0) throw BadParameter("systole must be positive");
      const auto metric = io::resolve_metric(in.graph, io::parse_metric(mtext));
      report::fill_verify(doc, in.graph, verify_metric(in.graph, metric, cap, target));
      emit();
    } else if (minimal->parsed()) {
      const auto in = load_graph(file);
      doc.input_sha = io::sha256_hex(in.text);
      report::fill_minimal(doc, in.graph, check_minimality(in.graph, cap));
      emit();
    } else if (obstruction->parsed()) {
      const auto in = load_graph(file);
      doc.input_sha = io::sha256_hex(in.text);
      report::fill_obstruction(doc, in.graph);
      emit();
    } else if (genus->parsed()) {
      const auto in = load_graph(file);
      doc.input_sha = io::sha256_hex(in.text);
      report::fill_genus(doc, in.graph);
      emit();
    } else if (gen->parsed()) {
      if (gen_wheel->parsed() || gen_g8->parsed()) {
        const auto g = gen_wheel->parsed() ? gen_wheel_family(n) : gen_example_g8();
        write_output(output, format == "rot" ? io::serialize_rotations(g) : io::serialize_fatgraph(g));
      } else {
        const auto g = gen_tri->parsed() ? gen_trivalent_girth(n) : gen_unitrivalent_girth(n);
        write_output(output, io::serialize_plain_graph(g));
      }
    } else if (girth_cmd->parsed()) {
      const auto text = read_input(file);
      doc.input_sha = io::sha256_hex(text);
      report::fill_girth(doc, io::parse_plain_graph(text));
      emit();
    } else if (pants->parsed()) {
      if (pants_height->parsed()) {
        doc.result["waist"] = l;
        if (lem2) {
          doc.result["variant"] = "equilateral-cosh";
          doc.result["height"] = hyperbolic::pants_height_equilateral(l);
        } else {
          doc.result["k"] = k;
          doc.result["height"] = hyperbolic::pants_height(l, k);
        }
      } else {
        doc.result["l"] = l;
        doc.result["distance"] = hyperbolic::pants_boundary_distance(l);
      }
      emit();
    } else if (cap_cmd->parsed()) {
      if (cap_plan->parsed()) {
        report::fill_cap_plan(doc, hyperbolic::cap_plan(parse_list(lengths)));
      } else {
        doc.result["l"] = l;
        doc.result["gap"] = hyperbolic::capping_gap(l);
        doc.result["branch_distance"] = hyperbolic::gap_branch_distance(l);
        doc.result["branch_height"] = hyperbolic::gap_branch_height(l);
        if (cap_girth->parsed()) doc.result["girth"] = hyperbolic::capping_girth(l);
      }
      emit();
    } else if (quasi->parsed()) {
      doc.result["alpha"] = alpha;
      doc.result["k"] = hyperbolic::quasi_constant(alpha);
      emit();
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const MissingLength& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidGraph& e) {
    std::cerr << "invalid fat graph: " << e.what() << '\n';
    return kInvalid;
  } catch (const CycleCapExceeded& e) {
    std::cerr << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    std::cerr << "bad parameter: " << e.what() << '\n';
    return kBadParameter;
  }
  return kOk;
}
