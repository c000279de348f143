// trilink: command line front end.
//
// Exit status: 0 success, 1 domain error (invalid input, failed check),
// 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trilink/error.hpp"
#include "trilink/io.hpp"

using namespace trilink;

namespace {

// A failed check whose report has already been written.
struct CheckFailed {
  std::string message;
};

struct Config {
  std::string output;
  std::string format = "json";
  bool normalize = false;
  std::uint64_t seed = 0;

  std::string tri, coords, realization, link, record, spec, order, diagram;
  std::string gen_kind = "simplex";
  int m = 6, steps = 0;
  std::size_t max_comp = 1, max_edges = 3;
  std::vector<Vertex> facet, edge, simplex;
  std::string direction = "auto";
  std::string diagram_out = "json";
  std::uint64_t budget = kDefaultShellingBudget;
  long max_expand_n = 8;
  std::string fixture = "join";
  long n = 5, k = 3;
  std::string p_hi;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Runner {
 public:
  Runner(const Config& cfg, std::string config_text) : cfg_(cfg), config_text_(std::move(config_text)) {}

  Json meta() const {
    std::ostringstream hash;
    hash << std::hex << fnv1a(config_text_);
    Json m;
    m["tool"] = "trilink";
    m["version"] = TRILINK_VERSION;
    m["config_hash"] = "fnv1a64:" + hash.str();
    return m;
  }

  void write(const std::string& text) const {
    if (cfg_.output.empty() || cfg_.output == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(cfg_.output, std::ios::binary);
    if (!out) throw Error("cannot write " + cfg_.output);
    out << text;
  }

  void emit(const Json& body) const {
    if (cfg_.format == "text") {
      write(body.dump(2) + "\n");
      return;
    }
    Json j;
    j["meta"] = meta();
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    write(j.dump() + "\n");
  }

  void emit_text(const std::string& text, const Json& body) const {
    if (cfg_.format == "text")
      write(text);
    else
      emit(body);
  }

  Triangulation tri() const {
    require(cfg_.tri, "--tri");
    return triangulation_from_json(read_json_file(cfg_.tri), !cfg_.normalize);
  }

  EdgeLink link(const Triangulation& t) const {
    require(cfg_.link, "--link");
    return check_link(t, link_cycles_from_json(read_json_file(cfg_.link)));
  }

  Coords4 coords() const { return coords4_from_json(read_json_file(cfg_.coords)); }

  Realization3 realization(const Triangulation& t) const {
    if (!cfg_.realization.empty()) return realization_from_json(read_json_file(cfg_.realization), t);
    if (!cfg_.coords.empty()) {
      Tet f = cfg_.facet.empty() ? default_facet(t) : facet_arg(cfg_.facet);
      return schlegel(t, coords(), f);
    }
    throw Error("need --realization or --coords");
  }

  static void require(const std::string& value, const char* flag) {
    if (value.empty()) throw CLI::RequiredError(flag);
  }

  static Tet facet_arg(const std::vector<Vertex>& v) {
    if (v.size() != 4) throw CLI::ValidationError("--facet", "expected four labels a,b,c,d");
    return sorted(Tet{v[0], v[1], v[2], v[3]});
  }

  // Subcommands.

  void gen() const {
    GeneratedComplex g;
    if (cfg_.gen_kind == "simplex") {
      g = simplex_boundary();
    } else if (cfg_.gen_kind == "cyclic") {
      g = cyclic_polytope_boundary(cfg_.m);
    } else if (cfg_.gen_kind == "join") {
      g = join_of_triangles();
    } else if (cfg_.gen_kind == "stacked") {
      g = stacked_sphere(cfg_.steps, cfg_.seed);
    } else {
      Triangulation start = cfg_.tri.empty() ? simplex_boundary().triangulation : tri();
      g.triangulation = pachner_walk(start, cfg_.steps, cfg_.seed);
      g.provenance = "pachner_walk(" + std::to_string(cfg_.seed) + ", " + std::to_string(cfg_.steps) + ")";
    }
    Json body = to_json(g.triangulation);
    body["provenance"] = g.provenance;
    if (!cfg_.coords.empty()) {
      if (!g.coords4) throw Error(g.provenance + " carries no coordinates");
      Json side;
      side["meta"] = meta();
      side["coords4"] = coords4_to_json(*g.coords4)["coords4"];
      std::ofstream out(cfg_.coords, std::ios::binary);
      if (!out) throw Error("cannot write " + cfg_.coords);
      out << side.dump() << "\n";
    }
    emit(body);
  }

  void validate_cmd() const {
    auto r = validate(tri());
    std::ostringstream text;
    text << (r.valid() ? "valid" : "invalid") << " f=(" << r.f.f0 << "," << r.f.f1 << "," << r.f.f2 << "," << r.f.f3
         << ") chi=" << r.euler_characteristic << "\n";
    for (const auto& d : r.failures) text << "  " << d.kind << " at " << format_simplex(d.simplex) << ": " << d.message << "\n";
    emit_text(text.str(), to_json(r));
    if (!r.valid())
      throw CheckFailed{r.failures.empty() ? "invalid triangulation"
                                           : r.failures.front().kind + " at " + format_simplex(r.failures.front().simplex) +
                                                 ": " + r.failures.front().message};
  }

  void links_enum() const {
    auto t = tri();
    Json arr = Json::array();
    std::ostringstream text;
    for_each_link(t, cfg_.max_comp, cfg_.max_edges, [&](const EdgeLink& l) {
      arr.push_back(to_json(l)["components"]);
      for (const auto& c : l.components) text << "(" << format_simplex(c) << ")";
      text << "\n";
      return true;
    });
    Json body;
    body["count"] = arr.size();
    body["links"] = arr;
    emit_text(text.str(), body);
  }

  void links_check() const {
    auto t = tri();
    auto l = link(t);
    Json body = to_json(l);
    body["k"] = l.edge_count();
    emit_text("valid link, k = " + std::to_string(l.edge_count()) + "\n", body);
  }

  void realize_cmd() const {
    auto t = tri();
    require(cfg_.coords, "--coords");
    Tet f = cfg_.facet.empty() ? default_facet(t) : facet_arg(cfg_.facet);
    emit(to_json(schlegel(t, coords(), f)));
  }

  void verify_embedding_cmd() const {
    auto t = tri();
    auto chk = verify_embedding(realization(t));
    Json body;
    body["ok"] = chk.ok;
    body["degenerate"] = Json::array();
    for (const auto& x : chk.degenerate) body["degenerate"].push_back(x);
    body["bad_pairs"] = Json::array();
    for (const auto& [a, b] : chk.bad_pairs) body["bad_pairs"].push_back({a, b});
    body["message"] = chk.message;
    emit_text(chk.message + "\n", body);
    if (!chk.ok) throw CheckFailed{chk.message};
  }

  Vec3 direction(const Realization3& r, const EdgeLink& l) const {
    if (cfg_.direction == "auto") return generic_direction(r, l);
    std::vector<std::string> parts;
    std::stringstream ss(cfg_.direction);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    if (parts.size() != 3) throw CLI::ValidationError("--direction", "expected auto or three rationals a,b,c");
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  }

  void diagram_cmd() const {
    auto t = tri();
    auto r = realization(t);
    auto l = link(t);
    auto dg = project(r, l, direction(r, l));
    if (cfg_.diagram_out == "svg")
      write(render_svg(dg));
    else if (cfg_.diagram_out == "pd")
      write(pd_text(dg));
    else if (cfg_.diagram_out == "gauss")
      write(gauss_text(dg));
    else
      emit(to_json(dg));
  }

  void emit_move(const Triangulation& out, const MoveRecord& rec) const {
    Json body = to_json(out);
    body["record"] = to_json(rec);
    emit(body);
  }

  void move_contract() const {
    if (cfg_.edge.size() != 2) throw CLI::ValidationError("--edge", "expected kept,removed");
    auto [out, rec] = contract_edge(tri(), {cfg_.edge[0], cfg_.edge[1]});
    emit_move(out, rec);
  }

  void move_expand() const {
    require(cfg_.spec, "--spec");
    Json j = read_json_file(cfg_.spec);
    auto [out, rec] = expand(tri(), expansion_spec_from_json(j.contains("spec") ? j.at("spec") : j));
    emit_move(out, rec);
  }

  void move_stellar() const {
    auto [out, rec] = stellar_subdivide(tri(), cfg_.simplex);
    emit_move(out, rec);
  }

  void move_transport() const {
    require(cfg_.link, "--link");
    require(cfg_.record, "--record");
    Json rj = read_json_file(cfg_.record);
    auto rec = move_record_from_json(rj.contains("record") ? rj.at("record") : rj);
    EdgeLink l{link_cycles_from_json(read_json_file(cfg_.link))};
    if (!cfg_.tri.empty()) l = check_link(tri(), l.components);
    auto moved = transport_link(l, rec);
    Json body = to_json(moved);
    body["k_before"] = l.edge_count();
    body["k_after"] = moved.edge_count();
    emit(body);
  }

  void shelling_find() const {
    auto t = tri();
    auto s = find_shelling(t, cfg_.budget);
    Json body;
    body["status"] = to_string(s.status);
    body["nodes"] = s.nodes;
    body["order"] = s.order ? shelling_to_json(*s.order)["order"] : Json(nullptr);
    emit_text(to_string(s.status) + " after " + std::to_string(s.nodes) + " nodes\n", body);
    if (s.status != ShellingStatus::found) throw CheckFailed{"no shelling: " + to_string(s.status)};
  }

  void shelling_verify() const {
    require(cfg_.order, "--order");
    auto t = tri();
    auto chk = verify_shelling(t, shelling_from_json(read_json_file(cfg_.order)));
    Json body;
    body["ok"] = chk.ok;
    body["failing_index"] = chk.ok ? Json(nullptr) : Json(chk.failing_index);
    body["message"] = chk.message;
    emit_text(chk.message + "\n", body);
    if (!chk.ok) throw CheckFailed{chk.message};
  }

  void bounds_report() const {
    auto t = tri();
    auto l = link(t);
    Evidence ev;
    if (!cfg_.coords.empty()) ev.coords4 = coords();
    if (!cfg_.realization.empty()) ev.realization = realization_from_json(read_json_file(cfg_.realization), t);
    if (!cfg_.order.empty()) ev.shelling = shelling_from_json(read_json_file(cfg_.order));
    if (!cfg_.diagram.empty()) ev.diagram = diagram_from_json(read_json_file(cfg_.diagram));
    emit(to_json(report(t, l, ev)));
  }

  void bounds_table() const {
    std::optional<BigInt> p;
    if (!cfg_.p_hi.empty()) p = parse_bigint(cfg_.p_hi);
    auto b = cr_bounds_all(cfg_.n, cfg_.k, p, cfg_.max_expand_n);
    Json body;
    body["n"] = cfg_.n;
    body["k"] = cfg_.k;
    body["thm_1_1_1"] = to_string(b.thm_1_1_1);
    body["thm_1_1_2"] = to_string(b.thm_1_1_2);
    body["thm_1_1_3"] = {{"base", to_string(b.thm_1_1_3.base)},
                         {"exponent", std::to_string(b.thm_1_1_3.exponent)},
                         {"digits", b.thm_1_1_3.digits()}};
    body["thm_3_2"] = to_string(b.thm_3_2);
    body["shellable_display"] = b.shellable_display;
    body["general_display"] = b.general_display ? Json(*b.general_display) : Json(nullptr);
    emit(body);
  }

  void demo_thm1() const {
    GeneratedComplex g;
    std::vector<std::vector<Vertex>> cycles;
    if (cfg_.fixture == "simplex") {
      g = simplex_boundary();
      cycles = {{1, 2, 3}};
    } else if (cfg_.fixture == "join") {
      g = join_of_triangles();
      cycles = {{1, 2, 3}, {4, 5, 6}};
    } else if (cfg_.fixture == "cyclic") {
      g = cyclic_polytope_boundary(cfg_.m);
      cycles = {{1, 2, 3}, {4, 5, 6}};
      if (cfg_.m < 6) cycles.pop_back();
    } else {
      g = stacked_sphere(cfg_.steps, cfg_.seed);
      cycles = {{1, 2, 3}};
    }
    auto l = check_link(g.triangulation, cycles);
    Evidence ev;
    ev.coords4 = g.coords4;
    ev.realization = schlegel(g);
    auto emb = verify_embedding(*ev.realization);
    if (!emb.ok) throw Error("Schlegel image is not embedded: " + emb.message);
    ev.diagram = project(*ev.realization, l, generic_direction(*ev.realization, l));
    auto rep = report(g.triangulation, l, ev);
    std::clog << "demo: " << g.provenance << ", link with k = " << l.edge_count() << ", " << *rep.achieved
              << " crossings < 4n^2 = " << to_string(rep.cr.thm_1_1_1) << "\n";
    emit(to_json(rep));
  }

 private:
  const Config& cfg_;
  std::string config_text_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulated 3-spheres, edge links and certified crossing-number bounds"};
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.set_version_flag("--version", TRILINK_VERSION);
  app.require_subcommand(1);
  Config cfg;
  app.add_option("-o,--output", cfg.output, "Write the artifact here instead of stdout");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--normalize", cfg.normalize, "Accept and re-canonicalize unsorted triangulation input");
  app.add_option("--seed", cfg.seed, "Seed for the documented LCG");

  auto tri_opt = [&](CLI::App* sub) { sub->add_option("--tri", cfg.tri, "Triangulation JSON")->check(CLI::ExistingFile); };

  auto* gen = app.add_subcommand("gen", "Generate a reference triangulation");
  gen->add_option("kind", cfg.gen_kind)->required()->check(CLI::IsMember({"simplex", "cyclic", "join", "stacked", "walk"}));
  gen->add_option("--m", cfg.m, "Vertices of the cyclic polytope")->check(CLI::Range(5, 1000));
  gen->add_option("--steps", cfg.steps, "Stacking steps or walk length")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", cfg.seed, "Seed for the documented LCG");
  gen->add_option("--coords", cfg.coords, "Also write the coords4 sidecar here");
  gen->add_option("--tri", cfg.tri, "Start of a walk (default: simplex boundary)")->check(CLI::ExistingFile);

  auto* val = app.add_subcommand("validate", "Check that a triangulation is a closed 3-manifold");
  tri_opt(val);

  auto* links = app.add_subcommand("links", "Links in the 1-skeleton");
  links->require_subcommand(1);
  auto* links_enum = links->add_subcommand("enum", "Enumerate canonical links");
  tri_opt(links_enum);
  links_enum->add_option("--max-comp", cfg.max_comp)->check(CLI::PositiveNumber);
  links_enum->add_option("--max-edges", cfg.max_edges)->check(CLI::Range(3, 64));
  auto* links_check = links->add_subcommand("check", "Validate and canonicalize a link");
  tri_opt(links_check);
  links_check->add_option("--link", cfg.link)->check(CLI::ExistingFile);

  auto* realize = app.add_subcommand("realize", "Schlegel diagram from 4D coordinates");
  tri_opt(realize);
  realize->add_option("--coords", cfg.coords, "coords4 sidecar")->check(CLI::ExistingFile);
  realize->add_option("--facet", cfg.facet, "Facet to remove, a,b,c,d")->delimiter(',');

  auto* verify = app.add_subcommand("verify-embedding", "Exact straight-line embedding check");
  tri_opt(verify);
  verify->add_option("--realization", cfg.realization)->check(CLI::ExistingFile);
  verify->add_option("--coords", cfg.coords)->check(CLI::ExistingFile);
  verify->add_option("--facet", cfg.facet)->delimiter(',');

  auto* diag = app.add_subcommand("diagram", "Project a link to a diagram");
  tri_opt(diag);
  diag->add_option("--realization", cfg.realization)->check(CLI::ExistingFile);
  diag->add_option("--coords", cfg.coords)->check(CLI::ExistingFile);
  diag->add_option("--facet", cfg.facet)->delimiter(',');
  diag->add_option("--link", cfg.link)->check(CLI::ExistingFile);
  diag->add_option("--direction", cfg.direction, "auto or a,b,c");
  diag->add_option("--out", cfg.diagram_out)->check(CLI::IsMember({"svg", "pd", "gauss", "json"}));

  auto* move = app.add_subcommand("move", "Contractions, expansions, subdivisions and link transport");
  move->require_subcommand(1);
  auto* contract = move->add_subcommand("contract", "Contract edge kept,removed");
  tri_opt(contract);
  contract->add_option("--edge", cfg.edge)->delimiter(',')->required();
  auto* expand_cmd = move->add_subcommand("expand", "Split a vertex");
  tri_opt(expand_cmd);
  expand_cmd->add_option("--spec", cfg.spec)->check(CLI::ExistingFile);
  auto* stellar = move->add_subcommand("stellar", "Stellar subdivision of an edge, triangle or tetrahedron");
  tri_opt(stellar);
  stellar->add_option("--simplex", cfg.simplex)->delimiter(',')->required();
  auto* transport = move->add_subcommand("transport", "Carry a link through a move record");
  tri_opt(transport);
  transport->add_option("--link", cfg.link)->check(CLI::ExistingFile);
  transport->add_option("--record", cfg.record)->check(CLI::ExistingFile);

  auto* shell = app.add_subcommand("shelling", "Shellability");
  shell->require_subcommand(1);
  auto* shell_find = shell->add_subcommand("find", "Backtracking search");
  tri_opt(shell_find);
  shell_find->add_option("--budget", cfg.budget);
  auto* shell_verify = shell->add_subcommand("verify", "Check a proposed order");
  tri_opt(shell_verify);
  shell_verify->add_option("--order", cfg.order)->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Crossing-number bounds");
  bounds->require_subcommand(1);
  auto* bounds_report = bounds->add_subcommand("report", "Certified bound report for a link");
  tri_opt(bounds_report);
  bounds_report->add_option("--link", cfg.link)->check(CLI::ExistingFile);
  bounds_report->add_option("--coords", cfg.coords)->check(CLI::ExistingFile);
  bounds_report->add_option("--realization", cfg.realization)->check(CLI::ExistingFile);
  bounds_report->add_option("--shelling", cfg.order)->check(CLI::ExistingFile);
  bounds_report->add_option("--diagram", cfg.diagram)->check(CLI::ExistingFile);
  auto* bounds_table = bounds->add_subcommand("table", "All bounds for given n and k");
  bounds_table->add_option("--n", cfg.n)->required();
  bounds_table->add_option("--k", cfg.k)->required();
  bounds_table->add_option("--p-hi", cfg.p_hi, "Upper end of the p interval (decimal)");
  bounds_table->add_option("--max-expand-n", cfg.max_expand_n, "Largest n for the expanded 2^(810n^2) check");

  auto* demo = app.add_subcommand("demo", "End-to-end pipelines");
  demo->require_subcommand(1);
  auto* thm1 = demo->add_subcommand("thm1", "Schlegel projection pipeline on a polytopal fixture");
  thm1->add_option("--fixture", cfg.fixture)->check(CLI::IsMember({"simplex", "join", "cyclic", "stacked"}));
  thm1->add_option("--m", cfg.m)->check(CLI::Range(5, 1000));
  thm1->add_option("--steps", cfg.steps)->check(CLI::NonNegativeNumber);
  thm1->add_option("--seed", cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string config_text = app.config_to_str(true, false);
  std::clog << "trilink " << TRILINK_VERSION << " resolved config:\n" << config_text;

  Runner run(cfg, config_text);
  try {
    if (*gen) run.gen();
    else if (*val) run.validate_cmd();
    else if (*links_enum) run.links_enum();
    else if (*links_check) run.links_check();
    else if (*realize) run.realize_cmd();
    else if (*verify) run.verify_embedding_cmd();
    else if (*diag) run.diagram_cmd();
    else if (*contract) run.move_contract();
    else if (*expand_cmd) run.move_expand();
    else if (*stellar) run.move_stellar();
    else if (*transport) run.move_transport();
    else if (*shell_find) run.shelling_find();
    else if (*shell_verify) run.shelling_verify();
    else if (*bounds_report) run.bounds_report();
    else if (*bounds_table) run.bounds_table();
    else if (*thm1) run.demo_thm1();
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailed& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
