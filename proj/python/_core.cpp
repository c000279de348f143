// Python bindings. Structured values cross the boundary as JSON text in the
// same formats the CLI reads and writes; python/trilink wraps them as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trilink/error.hpp"
#include "trilink/io.hpp"

namespace py = pybind11;
using namespace trilink;

namespace {

Json parse(const std::string& s) { return Json::parse(s); }

Triangulation tri(const std::string& s, bool strict = true) { return triangulation_from_json(parse(s), strict); }

std::string move_result(const MoveResult& r) {
  Json j = to_json(r.first);
  j["record"] = to_json(r.second);
  return j.dump();
}

Tet tet_arg(const std::vector<Vertex>& v) {
  if (v.size() != 4) throw Error("a facet needs four vertex labels");
  return sorted(Tet{v[0], v[1], v[2], v[3]});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "trilink core: triangulated 3-spheres, edge links, diagrams and crossing-number bounds";
  m.attr("__version__") = TRILINK_VERSION;
  py::register_exception<Error>(m, "TrilinkError", PyExc_ValueError);

  m.def(
      "generate",
      [](const std::string& kind, int m_, int steps, std::uint64_t seed) {
        GeneratedComplex g;
        if (kind == "simplex")
          g = simplex_boundary();
        else if (kind == "cyclic")
          g = cyclic_polytope_boundary(m_);
        else if (kind == "join")
          g = join_of_triangles();
        else if (kind == "stacked")
          g = stacked_sphere(steps, seed);
        else if (kind == "walk")
          g.triangulation = pachner_walk(simplex_boundary().triangulation, steps, seed);
        else
          throw Error("unknown generator '" + kind + "'");
        Json j = to_json(g.triangulation);
        if (g.coords4) j["coords4"] = coords4_to_json(*g.coords4)["coords4"];
        return j.dump();
      },
      py::arg("kind"), py::arg("m") = 6, py::arg("steps") = 0, py::arg("seed") = 0);

  m.def(
      "pachner_walk",
      [](const std::string& t, int steps, std::uint64_t seed) { return to_json(pachner_walk(tri(t), steps, seed)).dump(); },
      py::arg("tri"), py::arg("steps"), py::arg("seed"));

  m.def(
      "normalize", [](const std::string& t) { return to_json(tri(t, false)).dump(); }, py::arg("tri"));

  m.def(
      "validate", [](const std::string& t, bool strict) { return to_json(validate(tri(t, strict))).dump(); },
      py::arg("tri"), py::arg("strict") = true);

  m.def(
      "enumerate_links",
      [](const std::string& t, std::size_t max_comp, std::size_t max_edges) {
        Json out = Json::array();
        for (const auto& l : enumerate_links(tri(t), max_comp, max_edges)) out.push_back(to_json(l)["components"]);
        return out.dump();
      },
      py::arg("tri"), py::arg("max_components"), py::arg("max_edges"));

  m.def(
      "check_link",
      [](const std::string& t, std::vector<std::vector<Vertex>> cycles) {
        return to_json(check_link(tri(t), std::move(cycles))).dump();
      },
      py::arg("tri"), py::arg("cycles"));

  m.def(
      "schlegel",
      [](const std::string& t, const std::string& coords, std::vector<Vertex> facet) {
        auto host = tri(t);
        Json c = parse(coords);
        Tet f = facet.empty() ? default_facet(host) : tet_arg(facet);
        return to_json(schlegel(host, coords4_from_json(c), f)).dump();
      },
      py::arg("tri"), py::arg("coords4"), py::arg("facet") = std::vector<Vertex>{});

  m.def(
      "verify_embedding",
      [](const std::string& t, const std::string& realization) {
        auto chk = verify_embedding(realization_from_json(parse(realization), tri(t)));
        return py::make_tuple(chk.ok, chk.message);
      },
      py::arg("tri"), py::arg("realization"));

  m.def(
      "project",
      [](const std::string& t, const std::string& realization, std::vector<std::vector<Vertex>> cycles,
         std::vector<std::string> direction) {
        auto host = tri(t);
        auto r = realization_from_json(parse(realization), host);
        auto l = check_link(host, std::move(cycles));
        Vec3 d;
        if (direction.empty())
          d = generic_direction(r, l);
        else if (direction.size() == 3)
          d = {parse_rational(direction[0]), parse_rational(direction[1]), parse_rational(direction[2])};
        else
          throw Error("a direction needs three coordinates");
        return to_json(project(r, l, d)).dump();
      },
      py::arg("tri"), py::arg("realization"), py::arg("cycles"), py::arg("direction") = std::vector<std::string>{});

  m.def(
      "diagram_text",
      [](const std::string& diagram, const std::string& fmt) {
        auto dg = diagram_from_json(parse(diagram));
        if (fmt == "pd") return pd_text(dg);
        if (fmt == "gauss") return gauss_text(dg);
        if (fmt == "svg") return render_svg(dg);
        throw Error("unknown diagram format '" + fmt + "'");
      },
      py::arg("diagram"), py::arg("format"));

  m.def(
      "linking_matrix", [](const std::string& diagram) { return linking_matrix(diagram_from_json(parse(diagram))); },
      py::arg("diagram"));

  m.def(
      "contract_edge", [](const std::string& t, Vertex a, Vertex b) { return move_result(contract_edge(tri(t), {a, b})); },
      py::arg("tri"), py::arg("kept"), py::arg("removed"));

  m.def(
      "expand",
      [](const std::string& t, const std::string& spec) {
        return move_result(expand(tri(t), expansion_spec_from_json(parse(spec))));
      },
      py::arg("tri"), py::arg("spec"));

  m.def(
      "stellar_subdivide",
      [](const std::string& t, const std::vector<Vertex>& simplex) { return move_result(stellar_subdivide(tri(t), simplex)); },
      py::arg("tri"), py::arg("simplex"));

  m.def(
      "transport_link",
      [](std::vector<std::vector<Vertex>> cycles, const std::string& record) {
        EdgeLink l{std::move(cycles)};
        return to_json(transport_link(l, move_record_from_json(parse(record)))).dump();
      },
      py::arg("cycles"), py::arg("record"));

  m.def(
      "find_shelling",
      [](const std::string& t, std::uint64_t budget) {
        auto s = find_shelling(tri(t), budget);
        Json j;
        j["status"] = to_string(s.status);
        j["nodes"] = s.nodes;
        j["order"] = s.order ? shelling_to_json(*s.order)["order"] : Json(nullptr);
        return j.dump();
      },
      py::arg("tri"), py::arg("budget") = kDefaultShellingBudget);

  m.def(
      "verify_shelling",
      [](const std::string& t, const std::string& order) {
        auto chk = verify_shelling(tri(t), shelling_from_json(parse(order)));
        return py::make_tuple(chk.ok, chk.failing_index, chk.message);
      },
      py::arg("tri"), py::arg("order"));

  m.def(
      "bounds_report",
      [](const std::string& t, std::vector<std::vector<Vertex>> cycles, const std::string& evidence) {
        auto host = tri(t);
        auto l = check_link(host, std::move(cycles));
        Json e = parse(evidence);
        Evidence ev;
        if (e.contains("coords4")) ev.coords4 = coords4_from_json(e);
        if (e.contains("realization")) ev.realization = realization_from_json(e.at("realization"), host);
        if (e.contains("order")) ev.shelling = shelling_from_json(e);
        if (e.contains("diagram")) ev.diagram = diagram_from_json(e.at("diagram"));
        return to_json(report(host, l, ev)).dump();
      },
      py::arg("tri"), py::arg("cycles"), py::arg("evidence") = "{}");

  m.def(
      "cr_bound_from_p",
      [](const std::string& k, const std::string& p) { return to_string(cr_bound_from_p(parse_bigint(k), parse_bigint(p))); },
      py::arg("k"), py::arg("p_hi"));

  m.def(
      "four_n_squared", [](long n, long k) { return to_string(cr_bounds_all(n, k).thm_1_1_1); }, py::arg("n"),
      py::arg("k"));
}
