#include "hiveweb/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace hiveweb::io {

namespace {

[[noreturn]] void malformed(const std::string& message) { throw Error(ErrorKind::Malformed, message); }

std::int64_t checked_magnitude(std::int64_t thirds) {
  const std::int64_t cap = max_input_thirds();
  if (thirds > cap || thirds < -cap) malformed("value exceeds HIVEWEB_MAX_THIRDS");
  return thirds;
}

std::int64_t integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t pos = 0;
    try {
      const long long v = std::stoll(s, &pos);
      if (pos == s.size()) return v;
    } catch (...) {
    }
  }
  malformed(what + " must be an integer");
}

int small_int(const Json& j, const std::string& what) {
  const auto v = integer(j, what);
  if (v < 0 || v > 100'000'000) malformed(what + " out of range");
  return static_cast<int>(v);
}

// Integer coordinate whose thirds-scaled value must respect the input cap.
std::int64_t capped_integer(std::int64_t v) {
  if (v > max_input_thirds() / 3 || v < -max_input_thirds() / 3) malformed("value exceeds HIVEWEB_MAX_THIRDS");
  return v;
}

SideRef side_ref(const Json& j) {
  if (!j.is_array() || j.size() != 2) malformed("attachment must be [triangle, side]");
  const int side = small_int(j[1], "side");
  if (side > 2) malformed("side must be 0, 1 or 2");
  return {small_int(j[0], "triangle"), side};
}

std::vector<std::int64_t> split_integers(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (...) {
      malformed("'" + text + "' is not a comma-separated integer list");
    }
    if (pos != item.size()) malformed("'" + text + "' is not a comma-separated integer list");
    out.push_back(capped_integer(v));
  }
  return out;
}

}  // namespace

std::int64_t max_input_thirds() {
  constexpr std::int64_t fallback = 1'000'000'000'000;
  const char* env = std::getenv("HIVEWEB_MAX_THIRDS");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(env, &pos);
    if (pos == std::string(env).size() && v > 0 && v <= (std::int64_t{1} << 60)) return v;
  } catch (...) {
  }
  malformed("HIVEWEB_MAX_THIRDS must be a positive integer");
}

Json to_json(Third v) { return Json{{"thirds", v.thirds()}}; }

Third third_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("thirds")) malformed("expected {\"thirds\": n}");
  return Third::from_thirds(checked_magnitude(integer(j["thirds"], "thirds")));
}

Json to_json(const Triangulation& t) {
  Json triangles = Json::array();
  Json corners = Json::array();
  for (int i = 0; i < t.triangle_count(); ++i) {
    triangles.push_back(i);
    corners.push_back(t.corners(i));
  }
  Json edges = Json::array();
  for (const Edge& e : t.edges()) {
    Json attach = Json::array({Json::array({e.first.triangle, e.first.side})});
    if (e.second)
      attach.push_back(Json::array({e.second->triangle, e.second->side}));
    else
      attach.push_back("boundary");
    edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"attach", attach}});
  }
  Json out{{"triangles", triangles}, {"corners", corners}, {"edges", edges}};
  if (const auto& s = t.signature())
    out["signature"] = {{"genus", s->genus}, {"boundary_components", s->boundary_components},
                        {"marked_points", s->marked_points}};
  return out;
}

Triangulation triangulation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("triangles") || !j.contains("edges")) malformed("triangulation needs triangles and edges");
  const Json& tris = j["triangles"];
  if (!tris.is_array()) malformed("triangles must be an array");
  const int f = static_cast<int>(tris.size());
  for (int i = 0; i < f; ++i)
    if (integer(tris[i], "triangle id") != i) malformed("triangle ids must be 0..f-1 in order");

  std::vector<Edge> edges;
  const Json& ej = j["edges"];
  if (!ej.is_array()) malformed("edges must be an array");
  for (const Json& e : ej) {
    if (!e.is_object() || !e.contains("attach")) malformed("edge needs id, tail, head, attach");
    Edge edge;
    edge.id = small_int(e.value("id", Json(-1)), "edge id");
    edge.tail = small_int(e.value("tail", Json(-1)), "tail");
    edge.head = small_int(e.value("head", Json(-1)), "head");
    const Json& at = e["attach"];
    if (!at.is_array() || at.size() != 2) malformed("attach must have two entries");
    edge.first = side_ref(at[0]);
    if (at[1].is_string() && at[1].get<std::string>() == "boundary")
      edge.second = std::nullopt;
    else
      edge.second = side_ref(at[1]);
    edges.push_back(edge);
  }

  std::optional<Signature> sig;
  if (j.contains("signature") && !j["signature"].is_null()) {
    const Json& s = j["signature"];
    sig = Signature{small_int(s.value("genus", Json(0)), "genus"),
                    small_int(s.value("boundary_components", Json(0)), "boundary_components"),
                    small_int(s.value("marked_points", Json(0)), "marked_points")};
  }

  std::vector<Corners> corners(f);
  if (j.contains("corners")) {
    const Json& cj = j["corners"];
    if (!cj.is_array() || static_cast<int>(cj.size()) != f) malformed("corners must parallel triangles");
    for (int i = 0; i < f; ++i) {
      if (!cj[i].is_array() || cj[i].size() != 3) malformed("each corner list needs three entries");
      for (int k = 0; k < 3; ++k) corners[i][k] = small_int(cj[i][k], "corner");
    }
  } else {
    std::vector<std::array<const Edge*, 3>> at(f, {nullptr, nullptr, nullptr});
    for (const Edge& e : edges) {
      for (const SideRef* r : {&e.first, e.second ? &*e.second : nullptr})
        if (r != nullptr && r->triangle < f) at[r->triangle][r->side] = &e;
    }
    for (int i = 0; i < f; ++i) {
      for (int k = 0; k < 3; ++k) {
        const Edge* before = at[i][(k + 2) % 3];
        const Edge* here = at[i][k];
        if (before == nullptr || here == nullptr) malformed("cannot infer corners of a triangle with a dangling side");
        std::set<int> common;
        for (int p : {before->tail, before->head})
          if (p == here->tail || p == here->head) common.insert(p);
        if (common.size() != 1) malformed("corners are ambiguous; give them explicitly");
        corners[i][k] = *common.begin();
      }
    }
  }
  return Triangulation(std::move(corners), std::move(edges), sig);
}

Json to_json(const Hive& h, const Triangulation* t) {
  Json values = Json::object();
  for (const auto& [v, value] : h.values()) values[v.key()] = to_json(value);
  Json out{{"values", values}};
  if (t != nullptr) out["triangulation"] = to_json(*t);
  return out;
}

Hive hive_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_object()) malformed("hive needs a values object");
  Hive h;
  for (const auto& [key, value] : j["values"].items()) {
    const auto v = ThetaVertexId::parse(key);
    if (!v) malformed("bad quiver vertex key '" + key + "'");
    h.set(*v, third_from_json(value));
  }
  return h;
}

Json to_json(const TriangleWebCoords& c) {
  return Json{{"x", c.x}, {"y", c.y}, {"z", c.z}, {"t", c.t}, {"u", c.u}, {"v", c.v}, {"w", c.w}};
}

TriangleWebCoords coords_from_json(const Json& j) {
  if (!j.is_object()) malformed("coords must be an object");
  auto field = [&j](const char* name) {
    if (!j.contains(name)) malformed(std::string("coords missing '") + name + "'");
    return capped_integer(integer(j[name], name));
  };
  return {field("x"), field("y"), field("z"), field("t"), field("u"), field("v"), field("w")};
}

Json to_json(const SurfaceWeb& w, const Triangulation* t) {
  Json coords = Json::object();
  for (const auto& [tri, c] : w.coords) coords[std::to_string(tri)] = to_json(c);
  Json out{{"coords", coords}};
  if (t != nullptr) out["triangulation"] = to_json(*t);
  return out;
}

SurfaceWeb surface_web_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_object()) malformed("web needs a coords object");
  SurfaceWeb w;
  for (const auto& [key, value] : j["coords"].items()) w.coords[small_int(Json(key), "triangle id")] = coords_from_json(value);
  return w;
}

Json to_json(const OrientedGraph& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  Json arcs = Json::array();
  for (const auto& [tail, head] : g.arcs()) arcs.push_back(Json::array({g.name(tail), g.name(head)}));
  return Json{{"vertices", vertices}, {"arcs", arcs}};
}

OrientedGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs")) malformed("graph needs vertices and arcs");
  auto name = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    malformed("vertex names must be strings or integers");
  };
  OrientedGraph g;
  for (const Json& v : j["vertices"]) g.add_vertex(name(v));
  for (const Json& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2) malformed("arc must be [tail, head]");
    g.add_arc(name(a[0]), name(a[1]));
  }
  return g;
}

TriangleWebCoords parse_coords(const std::string& text) {
  const auto v = split_integers(text);
  if (v.size() != 7) malformed("coords need seven integers x,y,z,t,u,v,w");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
}

LatticePoint parse_point(const std::string& text) {
  const auto v = split_integers(text);
  if (v.size() != 2) malformed("a lattice point is written x,y");
  return {v[0], v[1]};
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    malformed(path.string() + ": " + e.what());
  }
}

std::optional<Triangulation> embedded_triangulation(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object() || !doc.contains("triangulation")) return std::nullopt;
  const Json& t = doc["triangulation"];
  if (t.is_string()) return triangulation_from_json(read_file(base_dir / t.get<std::string>()));
  return triangulation_from_json(t);
}

std::string canonical(const Json& j) { return j.dump(); }

}  // namespace hiveweb::io
