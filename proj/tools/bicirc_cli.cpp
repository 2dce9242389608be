// Command line front end: the census sweep, the A5/S5 five-cycle scan,
// circulant classification, single-graph analysis, and the coset-graph
// roundtrip, with CSV/JSON emission for batch consumers.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicirc/aut.hpp"
#include "bicirc/bicirculant.hpp"
#include "bicirc/blocks.hpp"
#include "bicirc/census.hpp"
#include "bicirc/circulant.hpp"
#include "bicirc/coset.hpp"
#include "bicirc/errors.hpp"
#include "bicirc/fivecycle_scan.hpp"
#include "bicirc/graph_io.hpp"

using nlohmann::json;
using namespace bicirc;

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    default: return "undecided";
  }
}

std::string set_text(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// Writes to the path when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  file << text;
}

// ---------------------------------------------------------------- census --

std::string census_csv(const CensusResult& r) {
  std::ostringstream out;
  out << "symbol,order,connected,edge_transitive,vertex_transitive,"
         "arc_transitive,primitive,aut_order,iso_class,note\n";
  for (const CensusRecord& rec : r.records) {
    out << csv_quote(to_string(rec.symbol)) << ',' << rec.order << ','
        << (rec.connected ? "true" : "false") << ','
        << outcome_name(rec.edge_transitive) << ','
        << (rec.vertex_transitive ? "true" : "false") << ','
        << (rec.arc_transitive ? "true" : "false") << ','
        << (rec.primitive ? "true" : "false") << ',' << rec.aut_order.str()
        << ',' << rec.iso_class << ',' << csv_quote(rec.note) << '\n';
  }
  return out.str();
}

json census_json(const CensusResult& r) {
  json j;
  j["job"] = {{"valence", r.job.valence},
              {"max_order", r.job.max_order},
              {"twice_odd_only", r.job.twice_odd_only},
              {"connected_only", r.job.connected_only},
              {"element_cap", r.job.element_cap},
              {"jobs", r.job.jobs}};
  j["records"] = json::array();
  for (const CensusRecord& rec : r.records)
    j["records"].push_back({{"symbol", to_string(rec.symbol)},
                            {"order", rec.order},
                            {"connected", rec.connected},
                            {"edge_transitive", outcome_name(rec.edge_transitive)},
                            {"vertex_transitive", rec.vertex_transitive},
                            {"arc_transitive", rec.arc_transitive},
                            {"primitive", rec.primitive},
                            {"aut_order", rec.aut_order.str()},
                            {"iso_class", rec.iso_class},
                            {"note", rec.note}});
  j["per_n"] = json::array();
  for (const CensusPerN& pn : r.per_n)
    j["per_n"].push_back({{"n", pn.n},
                          {"canonical", pn.canonical},
                          {"connected", pn.connected},
                          {"prune_survivors", pn.prune_survivors},
                          {"edge_transitive_symbols", pn.et_symbols},
                          {"edge_transitive_classes", pn.et_classes},
                          {"undecided", pn.undecided}});
  j["scanned"] = r.scanned;
  j["complete"] = r.complete();
  j["classes"] = r.class_count();
  return j;
}

int cmd_census(const CensusJob& job, const std::string& format,
               const std::string& out_path, bool lenient) {
  CensusResult result = run_census(job, &std::cerr);
  emit(out_path,
       format == "json" ? census_json(result).dump(2) + "\n" : census_csv(result));
  std::cerr << "classes=" << result.class_count()
            << " complete=" << (result.complete() ? "true" : "false") << '\n';
  return (result.complete() || lenient) ? 0 : 3;
}

// ------------------------------------------------------------- verify-s5 --

json direct_json(const DirectCheck& c) {
  return {{"stabilizer_order", c.stabilizer_order},
          {"conjugate_meet", c.conjugate_meet},
          {"product_meet", c.product_meet},
          {"coset_symmetric", c.coset_symmetric},
          {"satisfied", c.satisfied}};
}

int cmd_verify_s5(const std::string& format, const std::string& out_path) {
  FiveCycleScan scan = scan_five_cycles();
  int total = static_cast<int>(scan.rows.size());
  struct Claim {
    const char* name;
    bool pass;
    int hits;
    int expect;
  };
  const Claim claims[] = {
      {"direct case equalities have no five-cycle solution",
       scan.direct_infeasible(),
       scan.alternating_direct_hits + scan.symmetric_direct_hits, 0},
      {"inverse double-coset witness exists for every five-cycle",
       scan.inverse_total(), scan.inverse_hits, total},
      {"twisted case equalities never hold together",
       scan.twisted_infeasible(), scan.twisted_hits, 0},
  };

  if (format == "json") {
    json j;
    j["claims"] = json::array();
    for (const Claim& c : claims)
      j["claims"].push_back({{"claim", c.name},
                             {"pass", c.pass},
                             {"satisfying", c.hits},
                             {"expected", c.expect},
                             {"total", total}});
    j["rows"] = json::array();
    for (const FiveCycleRow& row : scan.rows) {
      json r;
      r["sigma"] = to_cycle_string(row.sigma);
      r["direct_alternating"] = direct_json(row.alternating_direct);
      r["direct_symmetric"] = direct_json(row.symmetric_direct);
      if (row.inverse)
        r["inverse_witness"] = {{"lambda1", to_cycle_string(row.inverse->lambda1)},
                                {"lambda2", to_cycle_string(row.inverse->lambda2)}};
      r["twisted"] = {{"stabilizer_order", row.twisted.stabilizer_order},
                      {"even_conjugate_meet", row.twisted.even_conjugate_meet},
                      {"even_product_meet", row.twisted.even_product_meet},
                      {"odd_product_meet", row.twisted.odd_product_meet},
                      {"first_equality", row.twisted.first_equality},
                      {"second_equality", row.twisted.second_equality},
                      {"satisfied", row.twisted.satisfied}};
      j["rows"].push_back(std::move(r));
    }
    j["all_claims_hold"] = scan.all_claims_hold();
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    int passed = 0;
    for (const Claim& c : claims) {
      passed += c.pass;
      out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " (" << c.hits
          << '/' << total << " five-cycles"
          << (c.expect == 0 ? " satisfy it" : " have one") << ")\n";
    }
    out << passed << "/3 claims hold\n";
    emit(out_path, out.str());
  }
  return scan.all_claims_hold() ? 0 : 1;
}

// ----------------------------------------------------- classify-circulant --

json block_witness_json(const BlockQuotientWitness& w) {
  return {{"d", w.d},
          {"d_interior_in_steps", w.d_interior_in_steps},
          {"quotient", to_string(w.quotient)}};
}

json tensor_witness_json(const TensorFactorWitness& w) {
  return {{"d", w.d}, {"e", w.e}, {"r", w.r}, {"factor", to_string(w.factor)}};
}

std::string witness_text(const ClassificationReport& rep) {
  std::ostringstream out;
  for (const BlockQuotientWitness& w : rep.block_quotients)
    out << "  block witness: D=" << set_text(w.d)
        << " interior=" << (w.d_interior_in_steps ? "true" : "false")
        << " quotient=" << to_string(w.quotient) << '\n';
  for (const TensorFactorWitness& w : rep.tensor_factors)
    out << "  tensor witness: D=" << set_text(w.d) << " E=" << set_text(w.e)
        << " R=" << set_text(w.r) << " factor=" << to_string(w.factor) << '\n';
  return out.str();
}

int cmd_classify(int n, const std::string& steps_text, int coverage,
                 const std::string& format, const std::string& out_path) {
  if (coverage > 0) {
    CoverageReport rep = exhaustive_case_coverage(coverage);
    if (format == "json") {
      json j;
      j["max_n"] = rep.max_n;
      j["counts"] = json::array();
      for (const CoverageCount& c : rep.counts)
        j["counts"].push_back({{"n", c.n},
                               {"connected", c.connected},
                               {"arc_transitive", c.arc_transitive}});
      j["rows"] = json::array();
      for (const CoverageRow& row : rep.rows) {
        json r = {{"n", row.sym.n},
                  {"symbol", to_string(row.sym)},
                  {"valence", row.sym.valence()},
                  {"cases", row.report.case_labels()}};
        r["block_witnesses"] = json::array();
        for (const BlockQuotientWitness& w : row.report.block_quotients)
          r["block_witnesses"].push_back(block_witness_json(w));
        r["tensor_witnesses"] = json::array();
        for (const TensorFactorWitness& w : row.report.tensor_factors)
          r["tensor_witnesses"].push_back(tensor_witness_json(w));
        j["rows"].push_back(std::move(r));
      }
      j["all_classified"] = rep.all_classified;
      emit(out_path, j.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "n,symbol,valence,cases,witnesses\n";
      for (const CoverageRow& row : rep.rows) {
        std::string wit;
        for (const BlockQuotientWitness& w : row.report.block_quotients) {
          if (!wit.empty()) wit += " | ";
          wit += "D=" + set_text(w.d) +
                 ";interior=" + (w.d_interior_in_steps ? "1" : "0") +
                 ";quotient=" + to_string(w.quotient);
        }
        for (const TensorFactorWitness& w : row.report.tensor_factors) {
          if (!wit.empty()) wit += " | ";
          wit += "D=" + set_text(w.d) + ";E=" + set_text(w.e) +
                 ";R=" + set_text(w.r) + ";factor=" + to_string(w.factor);
        }
        out << row.sym.n << ',' << csv_quote(to_string(row.sym)) << ','
            << row.sym.valence() << ',' << csv_quote(row.report.case_labels())
            << ',' << csv_quote(wit) << '\n';
      }
      emit(out_path, out.str());
    }
    return 0;
  }

  CirculantSymbol sym;
  sym.n = n;
  std::stringstream ss(steps_text);
  for (std::string part; std::getline(ss, part, ',');)
    sym.step.push_back(std::stoi(part));
  validate_circulant(sym);
  ClassificationReport rep = classify_arc_transitive_circulant(sym);
  if (format == "json") {
    json j = {{"symbol", to_string(sym)},
              {"valence", sym.valence()},
              {"cases", rep.case_labels()},
              {"complete", rep.complete},
              {"normal", rep.normal}};
    j["block_witnesses"] = json::array();
    for (const BlockQuotientWitness& w : rep.block_quotients)
      j["block_witnesses"].push_back(block_witness_json(w));
    j["tensor_witnesses"] = json::array();
    for (const TensorFactorWitness& w : rep.tensor_factors)
      j["tensor_witnesses"].push_back(tensor_witness_json(w));
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "symbol: " << to_string(sym) << '\n'
        << "valence: " << sym.valence() << '\n'
        << "cases: " << rep.case_labels() << '\n'
        << witness_text(rep);
    emit(out_path, out.str());
  }
  return 0;
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const std::string& graph6, const std::string& json_file,
                const std::string& named, int family_valence,
                std::uint64_t element_cap, const std::string& format,
                const std::string& out_path) {
  Graph g(1);
  if (!named.empty()) {
    g = named_graph(named);
  } else if (!graph6.empty()) {
    g = graph6_decode(graph6);
  } else {
    std::ifstream file(json_file);
    if (!file) throw std::runtime_error("cannot open " + json_file);
    std::stringstream buffer;
    buffer << file.rdbuf();
    g = from_edge_list_json(buffer.str());
  }

  bool regular = true;
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.degree(0)) regular = false;
  int d = family_valence > 0 ? family_valence : (regular ? g.degree(0) : 0);

  Group aut = automorphism_group(g, GroupOptions{element_cap});
  bool vt = is_vertex_transitive(g, aut);
  bool et = is_edge_transitive(g, aut);
  bool at = is_arc_transitive(g, aut);
  bool prim = vt && is_primitive(aut);

  std::string blocks_note;
  std::vector<BlockSystem> systems;
  if (vt && !prim) {
    try {
      systems = all_minimal_block_systems(aut);
    } catch (const CapExceededError&) {
      blocks_note = "skipped: element cap";
    }
  }

  FamilyCheck family{Outcome::no, std::nullopt};
  std::string family_note;
  if (d > 0) {
    family = in_family_F(g, d, element_cap);
    if (family.status == Outcome::undecided) family_note = "element cap";
  } else {
    family_note = "graph is irregular; pass --d";
  }
  Outcome prim_case = d > 0 ? primitive_case_check(g, d) : Outcome::undecided;

  if (format == "json") {
    json j = {{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"connected", is_connected(g)},
              {"regular_valence", regular ? g.degree(0) : -1},
              {"aut_order", aut.order_big().str()},
              {"vertex_transitive", vt},
              {"edge_transitive", et},
              {"arc_transitive", at},
              {"primitive", prim}};
    j["minimal_block_systems"] = json::array();
    for (const BlockSystem& s : systems)
      j["minimal_block_systems"].push_back(
          {{"block_size", s.blocks.classes[0].size()},
           {"class_count", s.blocks.classes.size()},
           {"first_block", s.blocks.classes[0]},
           {"normal", s.is_normal},
           {"kernel_order", s.kernel.order()}});
    if (!blocks_note.empty()) j["minimal_block_systems_note"] = blocks_note;
    j["family"] = {{"valence", d}, {"status", outcome_name(family.status)}};
    if (family.witness) {
      j["family"]["cycle_orbit"] = family.witness->cycle_orbit;
      j["family"]["rho"] = to_cycle_string(family.witness->rho);
    }
    if (!family_note.empty()) j["family"]["note"] = family_note;
    j["primitive_case_consistent"] = outcome_name(prim_case);
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "vertices: " << g.vertex_count() << '\n'
        << "edges: " << g.edge_count() << '\n'
        << "connected: " << (is_connected(g) ? "true" : "false") << '\n';
    if (regular) out << "regular: " << g.degree(0) << '\n';
    out << "|Aut|: " << aut.order_big().str() << '\n'
        << "vertex-transitive: " << (vt ? "true" : "false") << '\n'
        << "edge-transitive: " << (et ? "true" : "false") << '\n'
        << "arc-transitive: " << (at ? "true" : "false") << '\n'
        << "primitive: " << (prim ? "true" : "false") << '\n';
    if (prim) {
      out << "minimal block systems: none (primitive)\n";
    } else if (!blocks_note.empty()) {
      out << "minimal block systems: " << blocks_note << '\n';
    } else {
      out << "minimal block systems: " << systems.size() << '\n';
      for (const BlockSystem& s : systems)
        out << "  size " << s.blocks.classes[0].size() << " x "
            << s.blocks.classes.size() << ", first block "
            << set_text(s.blocks.classes[0])
            << ", normal=" << (s.is_normal ? "true" : "false") << '\n';
    }
    out << "family F(" << d << "): " << outcome_name(family.status);
    if (!family_note.empty()) out << " (" << family_note << ")";
    out << '\n';
    if (family.witness)
      out << "  cycle orbit " << set_text(family.witness->cycle_orbit)
          << ", rho = " << to_cycle_string(family.witness->rho) << '\n';
    out << "primitive-case check: " << outcome_name(prim_case) << '\n';
    emit(out_path, out.str());
  }
  return 0;
}

// --------------------------------------------------------- coset-roundtrip --

int cmd_coset_roundtrip(const std::string& name) {
  Graph g = named_graph(name);
  if (g.vertex_count() % 2 != 0)
    throw std::invalid_argument("roundtrip needs a graph of even order");
  int half = g.vertex_count() / 2;
  Group aut = automorphism_group(g);
  Group h = stabilizer(aut, 0);
  std::cout << "graph: " << name << " (" << g.vertex_count() << " vertices, valence "
            << g.degree(0) << ")\n|G|: " << aut.order() << "\n|H|: " << h.order()
            << '\n';
  std::optional<OrderNWitness> w = exists_order_n_witness(aut, h, half);
  if (!w) {
    std::cout << "witness: none\n";
    return 1;
  }
  std::cout << "witness g: " << to_cycle_string(w->witness) << " (order " << half
            << ", case " << (w->report.case1 ? "1" : "2") << ")\n"
            << "|H meet H^g|: " << w->report.conj_meet << '\n'
            << "|H<g> meet HgH|: " << w->report.product_meet << '\n';
  CosetGraphSpec spec{aut, h, w->witness};
  int valence = coset_valence(spec);
  Graph rebuilt = coset_graph(spec);
  bool iso = is_isomorphic(rebuilt, g);
  std::cout << "coset valence: " << valence << '\n'
            << "isomorphic: " << (iso ? "true" : "false") << '\n';
  return (iso && valence == g.degree(0)) ? 0 : 1;
}

// ------------------------------------------------------------------ named --

int cmd_named(const std::string& name) {
  if (name.empty()) {
    std::cout << "petersen\npetersen_complement\nclebsch\nlattice_L2_4\n"
                 "complete(m)\nGP(n,k)\n";
    return 0;
  }
  Graph g = named_graph(name);
  std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
            << "\nconnected: " << (is_connected(g) ? "true" : "false")
            << "\ngraph6: " << graph6_encode(g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-transitive bicirculant toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // census
  CensusJob job;
  std::string census_format = "csv", census_out;
  bool lenient = false;
  CLI::App* census = app.add_subcommand(
      "census", "sweep bicirculant symbols for edge-transitive classes");
  census->add_option("--d", job.valence, "valence")->capture_default_str();
  census->add_option("--max-order", job.max_order, "inclusive order cap")
      ->capture_default_str();
  census->add_flag("--twice-odd,!--all-orders", job.twice_odd_only,
                   "restrict to orders 2n with n odd");
  census->add_flag("--connected,!--any-connectivity", job.connected_only,
                   "restrict to connected graphs");
  census->add_option("--jobs", job.jobs, "worker threads")->capture_default_str();
  census->add_option("--element-cap", job.element_cap,
                     "group enumeration ceiling");
  census->add_option("--out", census_out, "output path (default stdout)");
  census->add_option("--format", census_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  census->add_flag("--lenient", lenient, "exit 0 even with undecided rows");
  census->callback(
      [&] { exit_code = cmd_census(job, census_format, census_out, lenient); });

  // verify-s5
  std::string s5_format = "text", s5_out;
  CLI::App* s5 = app.add_subcommand(
      "verify-s5", "run the A5/S5 five-cycle double-coset feasibility scan");
  s5->add_option("--format", s5_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  s5->add_option("--out", s5_out, "output path (default stdout)");
  s5->callback([&] { exit_code = cmd_verify_s5(s5_format, s5_out); });

  // classify-circulant
  int cls_n = 0, coverage = 0;
  std::string steps, cls_format = "text", cls_out;
  CLI::App* cls = app.add_subcommand(
      "classify-circulant",
      "classify a connected arc-transitive circulant, or emit the coverage table");
  cls->add_option("n", cls_n, "order of the cyclic group");
  cls->add_option("steps", steps, "comma-separated connection steps");
  cls->add_option("--coverage", coverage,
                  "emit the full table for all orders up to this bound");
  cls->add_option("--format", cls_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cls->add_option("--out", cls_out, "output path (default stdout)");
  cls->callback([&] {
    if (coverage == 0 && (cls_n == 0 || steps.empty()))
      throw CLI::ValidationError("classify-circulant",
                                 "pass n and steps, or --coverage N");
    exit_code = cmd_classify(cls_n, steps, coverage, cls_format, cls_out);
  });

  // analyze
  std::string graph6_text, json_file, named_name, an_format = "text", an_out;
  int family_valence = 0;
  std::uint64_t an_cap = kDefaultElementCap;
  CLI::App* an = app.add_subcommand("analyze", "report on a single graph");
  CLI::Option* og = an->add_option("--graph6", graph6_text, "graph6 string");
  CLI::Option* oj = an->add_option("--json-file", json_file,
                                   "path to {\"n\":..,\"edges\":[[a,b],..]}");
  CLI::Option* on = an->add_option("--named", named_name, "named graph");
  og->excludes(oj)->excludes(on);
  oj->excludes(on);
  an->add_option("--d", family_valence,
                 "family valence (default: the graph's valence when regular)");
  an->add_option("--element-cap", an_cap, "group enumeration ceiling");
  an->add_option("--format", an_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  an->add_option("--out", an_out, "output path (default stdout)");
  an->callback([&] {
    if (graph6_text.empty() && json_file.empty() && named_name.empty())
      throw CLI::ValidationError("analyze",
                                 "pass one of --graph6, --json-file, --named");
    exit_code = cmd_analyze(graph6_text, json_file, named_name, family_valence,
                            an_cap, an_format, an_out);
  });

  // coset-roundtrip
  std::string roundtrip_name = "petersen_complement";
  CLI::App* rt = app.add_subcommand(
      "coset-roundtrip",
      "rebuild a named graph as a coset graph of its automorphism group");
  rt->add_option("--graph", roundtrip_name, "named graph")->capture_default_str();
  rt->callback([&] { exit_code = cmd_coset_roundtrip(roundtrip_name); });

  // named
  std::string named_arg;
  CLI::App* nm = app.add_subcommand("named", "list or print a named graph");
  nm->add_option("name", named_arg, "graph name (omit to list)");
  nm->callback([&] { exit_code = cmd_named(named_arg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
