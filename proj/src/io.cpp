#include "trilink/io.hpp"

#include <fstream>
#include <sstream>

#include "trilink/error.hpp"

namespace trilink {

namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

template <std::size_t N>
Json face_json(const Face<N>& f) {
  Json a = Json::array();
  for (Vertex v : f) a.push_back(v);
  return a;
}

template <std::size_t N>
Face<N> face_from(const Json& j) {
  if (!j.is_array() || j.size() != N) throw FormatError("expected " + std::to_string(N) + " vertex labels");
  Face<N> f{};
  for (std::size_t i = 0; i < N; ++i) f[i] = j[i].get<Vertex>();
  return f;
}

template <std::size_t N>
Json faces_json(const std::vector<Face<N>>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(face_json(f));
  return a;
}

template <std::size_t N>
std::vector<Face<N>> faces_from(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of simplices");
  std::vector<Face<N>> out;
  for (const auto& x : j) out.push_back(face_from<N>(x));
  return out;
}

template <std::size_t N>
Json vec_json(const VecQ<N>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

template <std::size_t N>
VecQ<N> vec_from(const Json& j) {
  if (!j.is_array() || j.size() != N) throw FormatError("expected " + std::to_string(N) + " rational coordinates");
  VecQ<N> v;
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_string()) throw FormatError("rational coordinates must be \"p/q\" strings");
    v[i] = parse_rational(j[i].get<std::string>());
  }
  return v;
}

template <std::size_t N>
Json coords_json(const std::map<Vertex, VecQ<N>>& c) {
  Json o = Json::object();
  for (const auto& [v, p] : c) o[std::to_string(v)] = vec_json(p);
  return o;
}

template <std::size_t N>
std::map<Vertex, VecQ<N>> coords_from(const Json& j) {
  if (!j.is_object()) throw FormatError("coordinates must be an object keyed by vertex label");
  std::map<Vertex, VecQ<N>> out;
  for (const auto& [key, value] : j.items()) {
    Vertex v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw FormatError("bad vertex label '" + key + "'");
    }
    out[v] = vec_from<N>(value);
  }
  return out;
}

Json cycles_json(const std::vector<std::vector<Vertex>>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(c);
  return a;
}

Json bigint_json(const BigInt& z) { return to_string(z); }

BigInt bigint_from(const Json& j) {
  if (!j.is_string()) throw FormatError("big integers are serialized as decimal strings");
  return parse_bigint(j.get<std::string>());
}

}  // namespace

Json to_json(const Triangulation& t) {
  Json j;
  j["vertices"] = t.vertices();
  j["tetrahedra"] = faces_json(t.tetrahedra());
  return j;
}

Triangulation triangulation_from_json(const Json& j, bool strict) {
  auto vertices = get<std::vector<Vertex>>(j, "vertices");
  if (!j.contains("tetrahedra")) throw FormatError("missing key \"tetrahedra\"");
  const Json& tj = j.at("tetrahedra");
  if (!tj.is_array()) throw FormatError("\"tetrahedra\" must be an array");
  std::vector<Tet> tets;
  for (std::size_t i = 0; i < tj.size(); ++i) {
    try {
      tets.push_back(face_from<4>(tj[i]));
    } catch (const std::exception& e) {
      throw FormatError("tetrahedron #" + std::to_string(i) + ": " + e.what());
    }
  }
  if (strict) {
    if (!std::is_sorted(vertices.begin(), vertices.end()))
      throw FormatError("vertices are not sorted ascending (use --normalize)");
    for (std::size_t i = 0; i < tets.size(); ++i) {
      if (!std::is_sorted(tets[i].begin(), tets[i].end()))
        throw FormatError("tetrahedron #" + std::to_string(i) + " " + format_simplex(tets[i]) +
                          " is not sorted ascending (use --normalize)");
      if (i > 0 && !(tets[i - 1] < tets[i]))
        throw FormatError("tetrahedra are not strictly increasing at #" + std::to_string(i) + " (use --normalize)");
    }
  }
  return Triangulation(std::move(vertices), std::move(tets));
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  j["certifies"] = r.valid() ? "closed 3-manifold (S^3 assumed)" : "nothing";
  j["is_closed_pseudomanifold"] = r.is_closed_pseudomanifold;
  j["is_connected"] = r.is_connected;
  j["vertex_links_are_2spheres"] = r.vertex_links_are_2spheres;
  j["euler_characteristic"] = r.euler_characteristic;
  j["f_vector"] = {r.f.f0, r.f.f1, r.f.f2, r.f.f3};
  Json fails = Json::array();
  for (const auto& d : r.failures) {
    Json x;
    x["kind"] = d.kind;
    x["simplex"] = d.simplex;
    x["message"] = d.message;
    fails.push_back(x);
  }
  j["failures"] = fails;
  return j;
}

Json coords4_to_json(const Coords4& c) {
  Json j;
  j["coords4"] = coords_json(c);
  return j;
}

Coords4 coords4_from_json(const Json& j) {
  if (!j.contains("coords4")) throw FormatError("missing key \"coords4\"");
  return coords_from<4>(j.at("coords4"));
}

Json to_json(const Realization3& r) {
  Json j;
  j["coords3"] = coords_json(r.coords);
  j["omitted_facet"] = r.omitted_facet ? face_json(*r.omitted_facet) : Json(nullptr);
  return j;
}

Realization3 realization_from_json(const Json& j, const Triangulation& host) {
  if (!j.contains("coords3")) throw FormatError("missing key \"coords3\"");
  Realization3 r;
  r.host = host;
  r.coords = coords_from<3>(j.at("coords3"));
  if (j.contains("omitted_facet") && !j.at("omitted_facet").is_null()) {
    r.omitted_facet = sorted(face_from<4>(j.at("omitted_facet")));
    if (!host.has_tet(*r.omitted_facet)) throw FormatError("omitted facet is not a tetrahedron of the triangulation");
  }
  return r;
}

Json to_json(const EdgeLink& l) {
  Json j;
  j["components"] = cycles_json(l.components);
  return j;
}

std::vector<std::vector<Vertex>> link_cycles_from_json(const Json& j) {
  return get<std::vector<std::vector<Vertex>>>(j, "components");
}

Json to_json(const ExpansionSpec& s) {
  Json j;
  j["vertex"] = s.vertex;
  j["new_label"] = s.new_label;
  j["boundary_cycle"] = s.boundary_cycle;
  j["disk_a"] = faces_json(s.disk_a);
  j["disk_b"] = faces_json(s.disk_b);
  return j;
}

ExpansionSpec expansion_spec_from_json(const Json& j) {
  ExpansionSpec s;
  s.vertex = get<Vertex>(j, "vertex");
  s.new_label = get<Vertex>(j, "new_label");
  s.boundary_cycle = get<std::vector<Vertex>>(j, "boundary_cycle");
  s.disk_a = faces_from<3>(j.at("disk_a"));
  s.disk_b = faces_from<3>(j.at("disk_b"));
  return s;
}

Json to_json(const MoveRecord& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["location"] = r.location;
  j["edge"] = r.edge ? face_json(*r.edge) : Json(nullptr);
  j["expansion"] = r.expansion ? to_json(*r.expansion) : Json(nullptr);
  j["removed"] = faces_json(r.removed);
  j["added"] = faces_json(r.added);
  Json vm = Json::array();
  for (const auto& [from, to] : r.vertex_map) vm.push_back({from, to});
  j["vertex_map"] = vm;
  return j;
}

MoveRecord move_record_from_json(const Json& j) {
  MoveRecord r;
  r.kind = parse_move_kind(get<std::string>(j, "kind"));
  r.location = get<std::vector<Vertex>>(j, "location");
  if (j.contains("edge") && !j.at("edge").is_null()) r.edge = face_from<2>(j.at("edge"));
  if (j.contains("expansion") && !j.at("expansion").is_null()) r.expansion = expansion_spec_from_json(j.at("expansion"));
  r.removed = faces_from<4>(j.at("removed"));
  r.added = faces_from<4>(j.at("added"));
  if (j.contains("vertex_map"))
    for (const auto& p : j.at("vertex_map")) r.vertex_map[p.at(0).get<Vertex>()] = p.at(1).get<Vertex>();
  return r;
}

Json shelling_to_json(const ShellingOrder& o) {
  Json j;
  j["order"] = faces_json(o);
  return j;
}

ShellingOrder shelling_from_json(const Json& j) {
  if (!j.contains("order")) throw FormatError("missing key \"order\"");
  return faces_from<4>(j.at("order"));
}

Json to_json(const Diagram& d) {
  Json j;
  j["direction"] = vec_json(d.direction);
  j["frame"] = {vec_json(d.frame[0]), vec_json(d.frame[1])};
  j["components"] = cycles_json(d.components);
  Json strands = Json::array();
  for (const auto& s : d.strands) {
    Json a = Json::array();
    for (const Vec2& p : s) a.push_back(vec_json(p));
    strands.push_back(a);
  }
  j["strands"] = strands;
  Json xs = Json::array();
  for (const Crossing& c : d.crossings) {
    Json x;
    x["id"] = c.id;
    x["over_segment"] = c.over_segment;
    x["under_segment"] = c.under_segment;
    x["over_component"] = c.over_component;
    x["under_component"] = c.under_component;
    x["point"] = vec_json(c.point);
    x["over_param"] = to_string(c.over_param);
    x["under_param"] = to_string(c.under_param);
    x["sign"] = c.sign;
    xs.push_back(x);
  }
  j["crossings"] = xs;
  j["crossing_count"] = d.crossings.size();
  Json pd = Json::array();
  for (const auto& x : d.pd) pd.push_back({x[0], x[1], x[2], x[3]});
  j["pd"] = pd;
  j["gauss"] = d.gauss;
  j["linking_matrix"] = linking_matrix(d);
  return j;
}

Diagram diagram_from_json(const Json& j) {
  Diagram d;
  d.direction = vec_from<3>(j.at("direction"));
  d.frame = {vec_from<3>(j.at("frame").at(0)), vec_from<3>(j.at("frame").at(1))};
  d.components = get<std::vector<std::vector<Vertex>>>(j, "components");
  for (const auto& s : j.at("strands")) {
    std::vector<Vec2> strand;
    for (const auto& p : s) strand.push_back(vec_from<2>(p));
    d.strands.push_back(std::move(strand));
  }
  for (const auto& x : j.at("crossings")) {
    Crossing c;
    c.id = x.at("id").get<std::size_t>();
    c.over_segment = x.at("over_segment").get<std::size_t>();
    c.under_segment = x.at("under_segment").get<std::size_t>();
    c.over_component = x.at("over_component").get<std::size_t>();
    c.under_component = x.at("under_component").get<std::size_t>();
    c.point = vec_from<2>(x.at("point"));
    c.over_param = parse_rational(x.at("over_param").get<std::string>());
    c.under_param = parse_rational(x.at("under_param").get<std::string>());
    c.sign = x.at("sign").get<int>();
    d.crossings.push_back(std::move(c));
  }
  for (const auto& x : j.at("pd")) d.pd.push_back(x.get<std::array<std::size_t, 4>>());
  d.gauss = get<std::vector<std::vector<long>>>(j, "gauss");
  return d;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["certificate"] = to_string(r.certificate);
  Json ver = Json::array();
  for (Certificate c : r.verified) ver.push_back(to_string(c));
  j["verified"] = ver;
  j["s3_assumed"] = r.s3_assumed;
  j["p_interval"] = {bigint_json(r.p.lo), bigint_json(r.p.hi)};
  j["p_hi_digits"] = decimal_digits(r.p.hi);
  j["d_interval"] = {{"lo_exclusive", to_string(r.d.lo_exclusive)}, {"hi", bigint_json(r.d.hi)}};
  Json cr;
  cr["thm_1_1_1"] = bigint_json(r.cr.thm_1_1_1);
  cr["thm_1_1_2"] = bigint_json(r.cr.thm_1_1_2);
  cr["thm_1_1_3"] = {{"base", bigint_json(r.cr.thm_1_1_3.base)},
                     {"exponent", std::to_string(r.cr.thm_1_1_3.exponent)},
                     {"digits", r.cr.thm_1_1_3.digits()}};
  cr["thm_3_2"] = bigint_json(r.cr.thm_3_2);
  j["cr_bounds"] = cr;
  j["displayed_inequalities"] = {{"shellable", r.cr.shellable_display},
                                 {"general", r.cr.general_display ? Json(*r.cr.general_display) : Json(nullptr)}};
  j["achieved"] = r.achieved ? Json(*r.achieved) : Json(nullptr);
  j["applicable"] = r.applicable;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.n = get<long>(j, "n");
  r.k = get<long>(j, "k");
  r.certificate = parse_certificate(get<std::string>(j, "certificate"));
  for (const auto& c : j.at("verified")) r.verified.push_back(parse_certificate(c.get<std::string>()));
  r.s3_assumed = get<bool>(j, "s3_assumed");
  r.p = {bigint_from(j.at("p_interval").at(0)), bigint_from(j.at("p_interval").at(1))};
  r.d.lo_exclusive = parse_rational(j.at("d_interval").at("lo_exclusive").get<std::string>());
  r.d.hi = bigint_from(j.at("d_interval").at("hi"));
  const Json& cr = j.at("cr_bounds");
  r.cr.thm_1_1_1 = bigint_from(cr.at("thm_1_1_1"));
  r.cr.thm_1_1_2 = bigint_from(cr.at("thm_1_1_2"));
  r.cr.thm_1_1_3.base = bigint_from(cr.at("thm_1_1_3").at("base"));
  r.cr.thm_1_1_3.exponent = std::stoul(cr.at("thm_1_1_3").at("exponent").get<std::string>());
  r.cr.thm_3_2 = bigint_from(cr.at("thm_3_2"));
  const Json& disp = j.at("displayed_inequalities");
  r.cr.shellable_display = disp.at("shellable").get<bool>();
  if (!disp.at("general").is_null()) r.cr.general_display = disp.at("general").get<bool>();
  if (!j.at("achieved").is_null()) r.achieved = j.at("achieved").get<long>();
  r.applicable = get<std::vector<std::string>>(j, "applicable");
  return r;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace trilink
