#include "hiveweb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hiveweb/json_io.hpp"
#include "hiveweb/random.hpp"
#include "hiveweb/surfacoid.hpp"

namespace hiveweb::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Options {
  std::string triangulation;
  std::string hive;
  std::string web;
  std::string graph;
  std::string coords;
  std::string out;
  std::string from;
  std::string to;
  std::string a, b, c;
  std::string diagonals;
  int vertices = 3;
  int edge = -1;
  std::uint64_t seed = 0;
  int bound = 2;
  int corner_bound = 2;
  int count = 1000;
  int window = -1;
  bool sweep = false;
};

struct Outcome {
  Json doc;
  int code = kOk;
};

[[noreturn]] void malformed(const std::string& message) { throw Error(ErrorKind::Malformed, message); }

fs::path base_of(const std::string& path) { return fs::path(path).parent_path(); }

Json load(const std::string& path, const char* flag) {
  if (path.empty()) malformed(std::string("missing ") + flag);
  return io::read_file(path);
}

// --triangulation wins over a triangulation embedded in the document.
Triangulation resolve_triangulation(const Options& o, const Json* doc, const std::string& doc_path) {
  if (!o.triangulation.empty()) return io::triangulation_from_json(io::read_file(o.triangulation));
  if (doc != nullptr)
    if (auto t = io::embedded_triangulation(*doc, base_of(doc_path))) return *t;
  malformed("missing --triangulation");
}

Json thirds_array(const TriangleHive& h) {
  Json out = Json::array();
  for (Third v : h.a) out.push_back(io::to_json(v));
  return out;
}

Json point_json(LatticePoint p) { return Json::array({p.x, p.y}); }

Outcome cmd_polygon(const Options& o) {
  std::vector<std::pair<int, int>> diagonals;
  if (!o.diagonals.empty()) {
    std::stringstream ss(o.diagonals);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) malformed("diagonals are written a-b,c-d");
      try {
        diagonals.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
      } catch (...) {
        malformed("diagonals are written a-b,c-d");
      }
    }
  }
  return {io::to_json(build_polygon(o.vertices, diagonals))};
}

Outcome cmd_validate(const Options& o) {
  std::optional<Json> hive_doc;
  if (!o.hive.empty()) hive_doc = io::read_file(o.hive);
  const Triangulation t = resolve_triangulation(o, hive_doc ? &*hive_doc : nullptr, o.hive);

  const auto report = validate_complex(t);
  if (!report.ok() || !hive_doc) {
    Json violations = Json::array();
    for (const auto& v : report.violations)
      violations.push_back({{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
    return {{{"valid", report.ok()}, {"violations", violations}}, report.ok() ? kOk : kInvalid};
  }

  const Hive h = io::hive_from_json(*hive_doc);
  Json violations = Json::array();
  for (const auto& v : validate_hive(t, h))
    violations.push_back({{"triangle", v.triangle}, {"rhombus", v.rhombus}, {"value", io::to_json(v.value)}});
  const bool valid = violations.empty();
  return {{{"valid", valid}, {"violations", violations}}, valid ? kOk : kInvalid};
}

Outcome cmd_web2hive(const Options& o) {
  if (!o.coords.empty()) {
    const Triangulation t = build_polygon(3, {});
    const SurfaceWeb web{{{0, io::parse_coords(o.coords)}}};
    return {io::to_json(surface_web_to_hive(t, web), &t)};
  }
  const Json doc = load(o.web, "--web or --coords");
  const Triangulation t = resolve_triangulation(o, &doc, o.web);
  return {io::to_json(surface_web_to_hive(t, io::surface_web_from_json(doc)), &t)};
}

Outcome cmd_hive2web(const Options& o) {
  const Json doc = load(o.hive, "--hive");
  const Triangulation t = resolve_triangulation(o, &doc, o.hive);
  return {io::to_json(hive_to_surface_web(t, io::hive_from_json(doc)), &t)};
}

Outcome cmd_flip(const Options& o) {
  std::optional<Json> hive_doc;
  if (!o.hive.empty()) hive_doc = io::read_file(o.hive);
  const Triangulation t = resolve_triangulation(o, hive_doc ? &*hive_doc : nullptr, o.hive);
  if (o.edge < 0) malformed("missing --edge");

  const FlipResult flip = flip_triangulation(t, o.edge);
  auto frame_json = [](const QuadFrame& f) {
    Json labels = Json::array();
    for (const auto& v : f.labels) labels.push_back(v.key());
    return labels;
  };
  Json doc;
  if (hive_doc) {
    const Hive h = io::hive_from_json(*hive_doc);
    require_hive(t, h);
    doc = io::to_json(octahedron_transport(h, flip.old_frame, flip.new_frame), &flip.triangulation);
  } else {
    doc = {{"triangulation", io::to_json(flip.triangulation)}};
  }
  doc["frames"] = {{"old", frame_json(flip.old_frame)}, {"new", frame_json(flip.new_frame)}};
  return {doc};
}

Outcome cmd_potential(const Options& o) {
  const Json doc = load(o.hive, "--hive");
  const Triangulation t = resolve_triangulation(o, &doc, o.hive);
  t.require_valid();
  return {io::to_json(tropical_potential(t, io::hive_from_json(doc)))};
}

Outcome cmd_cone(const Options& o) {
  const Json doc = load(o.hive, "--hive");
  const Triangulation t = resolve_triangulation(o, &doc, o.hive);
  t.require_valid();
  return {{{"in_positive_cone", is_in_positive_cone(t, io::hive_from_json(doc))}}};
}

Json oracle_instance(const TriangleWebCoords& c) {
  const TriangleHive formula = web_to_hive_triangle(c);
  const TriangleHive oracle = oracle_triangle_hive(c);
  return {{"coords", io::to_json(c)},
          {"formula", thirds_array(formula)},
          {"oracle", thirds_array(oracle)},
          {"match", formula == oracle}};
}

Outcome cmd_oracle(const Options& o) {
  if (!o.sweep) {
    if (o.coords.empty()) malformed("missing --coords (or --sweep)");
    Json doc = oracle_instance(io::parse_coords(o.coords));
    const bool match = doc["match"].get<bool>();
    return {doc, match ? kOk : kInvalid};
  }
  if (o.bound < 0 || o.corner_bound < 0 || o.count < 0) malformed("bounds and count must be non-negative");
  std::mt19937_64 rng(o.seed);
  Json mismatches = Json::array();
  for (int i = 0; i < o.count; ++i) {
    TriangleWebCoords c;
    c.x = uniform_int(rng, -o.bound, o.bound);
    for (auto* field : {&c.y, &c.z, &c.t, &c.u, &c.v, &c.w}) *field = uniform_int(rng, 0, o.corner_bound);
    if (web_to_hive_triangle(c) != oracle_triangle_hive(c)) mismatches.push_back(oracle_instance(c));
  }
  const bool match = mismatches.empty();
  return {{{"instances", o.count}, {"seed", o.seed}, {"mismatches", mismatches}, {"match", match}},
          match ? kOk : kInvalid};
}

Outcome cmd_gamma_dist(const Options& o) {
  if (o.to.empty()) malformed("missing --to");
  LatticePoint to = io::parse_point(o.to);
  if (!o.from.empty()) {
    const LatticePoint from = io::parse_point(o.from);
    to = {to.x - from.x, to.y - from.y};
  }
  return {io::to_json(gamma_distance(to))};
}

Outcome cmd_fermat(const Options& o) {
  if (o.a.empty() || o.b.empty() || o.c.empty()) malformed("fermat needs --a, --b and --c");
  const FermatSpec spec{io::parse_point(o.a), io::parse_point(o.b), io::parse_point(o.c)};
  Json doc{{"closed_form", io::to_json(fermat_closed_form(spec))}};
  if (o.window >= 0) {
    const GammaWindow w = gamma_window(o.window);
    for (LatticePoint p : {spec.a, spec.b, spec.c})
      if (!w.contains(p)) malformed("terminal outside the window");
    const auto brute = fermat_brute(w.graph, w.vertex(spec.a), w.vertex(spec.b), w.vertex(spec.c));
    Json argmin = Json::array();
    for (auto v : brute.argmin) argmin.push_back(point_json(w.point(v)));
    doc["brute"] = {{"value", io::to_json(brute.value)}, {"argmin", argmin}, {"window", o.window}};
  }
  return {doc};
}

Outcome cmd_sample(const Options& o) {
  const Triangulation t = resolve_triangulation(o, nullptr, "");
  return {io::to_json(sample_hive(t, o.bound, o.seed), &t)};
}

Outcome cmd_dist(const Options& o) {
  const OrientedGraph g = io::graph_from_json(load(o.graph, "--graph"));
  if (o.from.empty() || o.to.empty()) malformed("dist needs --from and --to");
  return {io::to_json(shortest_distance(g, g.vertex(o.from), g.vertex(o.to)))};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed:
    case ErrorKind::UnknownVertex:
    case ErrorKind::Overflow:
      return kMalformed;
    default:
      return kInvalid;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact SL3 web and hive calculus", "hiveweb"};
  app.require_subcommand(1);

  auto add_out = [&o](CLI::App* sub) { sub->add_option("--out", o.out, "Output path (default stdout)"); };

  auto* polygon = app.add_subcommand("polygon", "Triangulation of a convex polygon");
  polygon->add_option("--vertices", o.vertices, "Number of polygon vertices")->required();
  polygon->add_option("--diagonals", o.diagonals, "Diagonals as a-b,c-d");

  auto* validate = app.add_subcommand("validate", "Check a triangulation, or a hive over it");
  validate->add_option("--triangulation", o.triangulation);
  validate->add_option("--hive", o.hive);

  auto* web2hive = app.add_subcommand("web2hive", "Web coordinates to hive");
  web2hive->add_option("--coords", o.coords, "x,y,z,t,u,v,w for a single triangle");
  web2hive->add_option("--web", o.web);
  web2hive->add_option("--triangulation", o.triangulation);

  auto* hive2web = app.add_subcommand("hive2web", "Hive to web coordinates");
  hive2web->add_option("--hive", o.hive)->required();
  hive2web->add_option("--triangulation", o.triangulation);

  auto* flip = app.add_subcommand("flip", "Flip a diagonal, optionally transporting a hive");
  flip->add_option("--triangulation", o.triangulation);
  flip->add_option("--hive", o.hive);
  flip->add_option("--edge", o.edge)->required();

  auto* potential = app.add_subcommand("potential", "Tropical potential of an assignment");
  potential->add_option("--hive", o.hive)->required();
  potential->add_option("--triangulation", o.triangulation);

  auto* cone = app.add_subcommand("cone", "Positive cone membership");
  cone->add_option("--hive", o.hive)->required();
  cone->add_option("--triangulation", o.triangulation);

  auto* oracle = app.add_subcommand("oracle", "Compare closed-form and net-distance triangle hives");
  oracle->add_option("--coords", o.coords);
  oracle->add_flag("--sweep", o.sweep, "Check seeded random instances");
  oracle->add_option("--seed", o.seed);
  oracle->add_option("--bound", o.bound, "Largest |x| in a sweep");
  oracle->add_option("--corner-bound", o.corner_bound, "Largest corner count in a sweep");
  oracle->add_option("--count", o.count, "Number of sweep instances");

  auto* gamma = app.add_subcommand("gamma-dist", "Lattice distance");
  gamma->add_option("--from", o.from, "x,y (default 0,0)");
  gamma->add_option("--to", o.to, "x,y")->required();

  auto* fermat = app.add_subcommand("fermat", "Fermat value of three lattice points");
  fermat->add_option("--a", o.a, "lower-left x,y")->required();
  fermat->add_option("--b", o.b, "lower-right x,y")->required();
  fermat->add_option("--c", o.c, "upper x,y")->required();
  fermat->add_option("--window", o.window, "Also brute-force on [-R,R]^2");

  auto* sample = app.add_subcommand("sample", "Seeded random hive");
  sample->add_option("--triangulation", o.triangulation)->required();
  sample->add_option("--bound", o.bound);
  sample->add_option("--seed", o.seed);

  auto* dist = app.add_subcommand("dist", "Intersection-metric distance on a graph");
  dist->add_option("--graph", o.graph)->required();
  dist->add_option("--from", o.from)->required();
  dist->add_option("--to", o.to)->required();

  for (auto* sub : app.get_subcommands({})) add_out(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kMalformed;
  }

  const std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> handlers{
      {polygon, cmd_polygon},     {validate, cmd_validate},   {web2hive, cmd_web2hive}, {hive2web, cmd_hive2web},
      {flip, cmd_flip},           {potential, cmd_potential}, {cone, cmd_cone},         {oracle, cmd_oracle},
      {gamma, cmd_gamma_dist},    {fermat, cmd_fermat},       {sample, cmd_sample},     {dist, cmd_dist},
  };

  Outcome result;
  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) result = handler(o);
  } catch (const Error& e) {
    result = {{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}, exit_code(e.kind())};
    err << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    result = {{{"error", {{"kind", "Malformed"}, {"message", e.what()}}}}, kMalformed};
    err << "error: " << e.what() << "\n";
  }

  const std::string text = io::canonical(result.doc) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kMalformed;
    }
    file << text;
  }
  return result.code;
}

}  // namespace hiveweb::cli
