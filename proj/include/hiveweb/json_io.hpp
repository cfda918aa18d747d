#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hiveweb/hive.hpp"
#include "hiveweb/metric.hpp"
#include "hiveweb/web.hpp"

namespace hiveweb::io {

using Json = nlohmann::json;

/// Largest accepted magnitude for input values, in thirds.
std::int64_t max_input_thirds();

Json to_json(Third v);
Third third_from_json(const Json& j);

Json to_json(const Triangulation& t);
/// Missing "corners" are inferred from edge endpoints.
Triangulation triangulation_from_json(const Json& j);

/// {"values": {"c:0": {"thirds": n}, "e:3:1": ...}}, with the triangulation
/// inlined when given.
Json to_json(const Hive& h, const Triangulation* t = nullptr);
Hive hive_from_json(const Json& j);

Json to_json(const TriangleWebCoords& c);
TriangleWebCoords coords_from_json(const Json& j);

Json to_json(const SurfaceWeb& w, const Triangulation* t = nullptr);
SurfaceWeb surface_web_from_json(const Json& j);

Json to_json(const OrientedGraph& g);
OrientedGraph graph_from_json(const Json& j);

/// "x,y,z,t,u,v,w"
TriangleWebCoords parse_coords(const std::string& text);
/// "x,y"
LatticePoint parse_point(const std::string& text);

Json read_file(const std::filesystem::path& path);

/// The "triangulation" member of a document: inline object or a path
/// resolved against base_dir.
std::optional<Triangulation> embedded_triangulation(const Json& doc, const std::filesystem::path& base_dir);

/// Compact, key-sorted serialization.
std::string canonical(const Json& j);

}  // namespace hiveweb::io
