#include "hiveweb/web.hpp"

#include <string>

namespace hiveweb {

namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::int64_t sum(std::initializer_list<std::int64_t> terms) {
  std::int64_t s = 0;
  for (auto v : terms) s = checked_add(s, v);
  return s;
}

std::int64_t twice(std::int64_t v) { return checked_mul(2, v); }

std::string pair_string(const SideCounts& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

void require_valid(const TriangleWebCoords& c) {
  for (auto v : {c.y, c.z, c.t, c.u, c.v, c.w})
    if (v < 0) throw Error(ErrorKind::InvalidWebCoords, "corner arc counts must be non-negative");
}

TriangleHive web_to_hive_triangle(const TriangleWebCoords& c) {
  require_valid(c);
  const std::int64_t x = c.x;
  const std::int64_t long_out = std::max(twice(x), checked_sub(0, x));  // max{2x, -x}
  const std::int64_t short_out = std::max(x, checked_mul(-2, x));      // max{x, -2x}
  const std::int64_t absx3 = checked_mul(3, x < 0 ? checked_sub(0, x) : x);

  const std::int64_t top_in = sum({twice(c.v), c.w});     // 2v + w
  const std::int64_t top_out = sum({twice(c.w), c.v});    // 2w + v
  const std::int64_t left_in = sum({twice(c.u), c.t});    // 2u + t
  const std::int64_t left_out = sum({twice(c.t), c.u});   // 2t + u
  const std::int64_t right_in = sum({twice(c.y), c.z});   // 2y + z
  const std::int64_t right_out = sum({twice(c.z), c.y});  // 2z + y

  return TriangleHive::from_thirds({
      sum({left_out, top_out, long_out}),
      sum({top_out, right_out, short_out}),
      sum({top_in, left_in, short_out}),
      sum({top_in, left_out, right_out, absx3}),
      sum({top_in, right_in, long_out}),
      sum({right_out, left_in, long_out}),
      sum({left_out, right_in, short_out}),
  });
}

TriangleWebCoords hive_to_web_triangle(const TriangleHive& h) {
  if (!satisfies_rhombus(h)) throw Error(ErrorKind::InvalidHive, "triangle values violate the rhombus condition");
  const auto a = [&h](int i) { return h[i]; };
  const auto n = [](Third v) { return v.integer_part(); };
  TriangleWebCoords c;
  c.x = n(a(1) + a(5) + a(6) - a(2) - a(3) - a(7));
  c.w = n(a(1) + a(2) - a(4));
  c.u = n(a(3) + a(6) - a(4));
  c.y = n(a(5) + a(7) - a(4));
  c.v = n(min(a(3) + a(4) - a(6) - a(1), a(4) + a(5) - a(2) - a(7)));
  c.t = n(min(a(1) + a(4) - a(3) - a(2), a(4) + a(7) - a(6) - a(5)));
  c.z = n(min(a(2) + a(4) - a(1) - a(5), a(4) + a(6) - a(3) - a(7)));
  return c;
}

SideCounts side_arc_counts(Third near, Third far) {
  const Third first = 2 * near - far;
  const Third second = 2 * far - near;
  if (!first.is_integer() || !second.is_integer() || first < Third{} || second < Third{})
    throw Error(ErrorKind::InconsistentSide,
                "side counts " + first.to_string() + ", " + second.to_string() + " are not non-negative integers");
  return {first.integer_part(), second.integer_part()};
}

SideCounts side_counts(const TriangleHive& h, int side) {
  switch (side) {
    case 0: return side_arc_counts(h[2], h[5]);
    case 1: return side_arc_counts(h[7], h[6]);
    case 2: return side_arc_counts(h[3], h[1]);
  }
  throw Error(ErrorKind::Malformed, "side index out of range");
}

Hive surface_web_to_hive(const Triangulation& t, const SurfaceWeb& web) {
  t.require_valid();
  std::vector<TriangleHive> local;
  for (int tri = 0; tri < t.triangle_count(); ++tri) {
    auto it = web.coords.find(tri);
    if (it == web.coords.end())
      throw Error(ErrorKind::InvalidWebCoords, "no coordinates for triangle " + std::to_string(tri));
    local.push_back(web_to_hive_triangle(it->second));
  }

  for (const Edge& e : t.edges()) {
    if (e.is_boundary()) continue;
    const SideCounts here = side_counts(local[e.first.triangle], e.first.side);
    const SideCounts there = side_counts(local[e.second->triangle], e.second->side);
    if (here.first != there.second || here.second != there.first)
      throw Error(ErrorKind::GluingMismatch, "edge " + std::to_string(e.id) + ": counts " + pair_string(here) +
                                                 " and " + pair_string(there) + " do not match");
  }

  Hive out;
  for (int tri = 0; tri < t.triangle_count(); ++tri) {
    const auto frame = triangle_frame(t, tri);
    for (std::size_t i = 0; i < 7; ++i) out.set(frame[i], local[tri].a[i]);
  }
  return out;
}

SurfaceWeb hive_to_surface_web(const Triangulation& t, const Hive& h) {
  require_hive(t, h);
  SurfaceWeb web;
  for (int tri = 0; tri < t.triangle_count(); ++tri) web.coords[tri] = hive_to_web_triangle(triangle_hive(t, h, tri));
  return web;
}

}  // namespace hiveweb
