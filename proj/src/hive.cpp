#include "hiveweb/hive.hpp"

#include <string>

namespace hiveweb {

TriangleHive TriangleHive::from_thirds(const std::array<std::int64_t, 7>& thirds) {
  TriangleHive h;
  for (std::size_t i = 0; i < 7; ++i) h.a[i] = Third::from_thirds(thirds[i]);
  return h;
}

std::array<std::int64_t, 7> TriangleHive::thirds() const {
  std::array<std::int64_t, 7> out{};
  for (std::size_t i = 0; i < 7; ++i) out[i] = a[i].thirds();
  return out;
}

std::array<Third, 9> rhombus_differences(const TriangleHive& h) {
  const auto a = [&h](int i) { return h[i]; };
  return {
      a(1) + a(2) - a(4),        a(3) + a(4) - a(1) - a(6), a(4) + a(5) - a(2) - a(7),
      a(5) + a(7) - a(4),        a(2) + a(4) - a(1) - a(5), a(4) + a(6) - a(3) - a(7),
      a(3) + a(6) - a(4),        a(4) + a(7) - a(5) - a(6), a(1) + a(4) - a(2) - a(3),
  };
}

bool satisfies_rhombus(const TriangleHive& h) {
  for (Third d : rhombus_differences(h))
    if (!d.is_integer() || d < Third{}) return false;
  return true;
}

std::array<ThetaVertexId, 7> triangle_frame(const Triangulation& t, int triangle) {
  return {
      t.vertex_near({triangle, 2}, 0), t.vertex_near({triangle, 0}, 0), t.vertex_near({triangle, 2}, 2),
      ThetaVertexId::center(triangle), t.vertex_near({triangle, 0}, 1), t.vertex_near({triangle, 1}, 2),
      t.vertex_near({triangle, 1}, 1),
  };
}

std::optional<Third> Hive::get(const ThetaVertexId& v) const {
  if (auto it = values_.find(v); it != values_.end()) return it->second;
  return std::nullopt;
}

Third Hive::at(const ThetaVertexId& v) const {
  if (auto it = values_.find(v); it != values_.end()) return it->second;
  throw Error(ErrorKind::IncompleteHive, "no value at " + v.key());
}

void require_complete(const Triangulation& t, const Hive& h) {
  for (const auto& v : theta_index(t))
    if (!h.get(v)) throw Error(ErrorKind::IncompleteHive, "no value at " + v.key());
}

TriangleHive triangle_hive(const Triangulation& t, const Hive& h, int triangle) {
  TriangleHive out;
  const auto frame = triangle_frame(t, triangle);
  for (std::size_t i = 0; i < 7; ++i) out.a[i] = h.at(frame[i]);
  return out;
}

std::vector<RhombusViolation> validate_hive(const Triangulation& t, const Hive& h) {
  t.require_valid();
  require_complete(t, h);
  std::vector<RhombusViolation> out;
  for (int tri = 0; tri < t.triangle_count(); ++tri) {
    const auto diffs = rhombus_differences(triangle_hive(t, h, tri));
    for (int r = 0; r < 9; ++r)
      if (!diffs[r].is_integer() || diffs[r] < Third{}) out.push_back({tri, r, diffs[r]});
  }
  return out;
}

void require_hive(const Triangulation& t, const Hive& h) {
  const auto violations = validate_hive(t, h);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorKind::InvalidHive, "rhombus " + std::to_string(v.rhombus) + " of triangle " +
                                            std::to_string(v.triangle) + " is " + v.value.to_string());
  }
}

std::array<Third, 4> octahedron_values(const std::array<Third, 12>& values) {
  const auto a = [&values](int i) { return values[i - 1]; };
  // b2 and b6 first: b5 and b7 depend on them.
  const Third b2 = max(a(1) + a(7), a(5) + a(3)) - a(2);
  const Third b6 = max(a(5) + a(11), a(7) + a(10)) - a(6);
  const Third b5 = max(a(4) + b6, a(9) + b2) - a(5);
  const Third b7 = max(b2 + a(12), a(8) + b6) - a(7);
  return {b2, b5, b6, b7};
}

Hive octahedron_transport(const Hive& h, const QuadFrame& old_frame, const QuadFrame& new_frame) {
  std::array<Third, 12> a{};
  for (int i = 0; i < 12; ++i) a[i] = h.at(old_frame.labels[i]);

  const auto local = [&a](std::array<int, 7> labels) {
    TriangleHive th;
    for (std::size_t i = 0; i < 7; ++i) th.a[i] = a[labels[i] - 1];
    return th;
  };
  // The two triangles of the quadrilateral in the per-triangle reading.
  if (!satisfies_rhombus(local({10, 6, 9, 5, 2, 4, 1})) || !satisfies_rhombus(local({3, 2, 8, 7, 6, 12, 11})))
    throw Error(ErrorKind::InvalidHive, "hive violates the rhombus condition around edge " +
                                            std::to_string(old_frame.diagonal));

  const auto [b2, b5, b6, b7] = octahedron_values(a);
  Hive out = h;
  out.set(new_frame[2], b2);
  out.set(new_frame[5], b5);
  out.set(new_frame[6], b6);
  out.set(new_frame[7], b7);
  return out;
}

FlippedHive transport_flip(const Triangulation& t, const Hive& h, int edge) {
  require_hive(t, h);
  auto flip = flip_triangulation(t, edge);
  Hive moved = octahedron_transport(h, flip.old_frame, flip.new_frame);
  return {std::move(flip.triangulation), std::move(moved)};
}

Third tropical_potential(const Triangulation& t, const Hive& h) {
  require_complete(t, h);
  std::optional<Third> best;
  for (int tri = 0; tri < t.triangle_count(); ++tri)
    for (Third d : rhombus_differences(triangle_hive(t, h, tri)))
      if (!best || -d > *best) best = -d;
  return best.value_or(Third{});
}

bool is_in_positive_cone(const Triangulation& t, const Hive& h) {
  require_complete(t, h);
  for (int tri = 0; tri < t.triangle_count(); ++tri)
    for (Third d : rhombus_differences(triangle_hive(t, h, tri))) {
      const Third alpha = -d;
      if (!alpha.is_integer() || alpha > Third{}) return false;
    }
  return true;
}

std::map<PositionKey, Third> values_by_position(const Triangulation& t, const Hive& h) {
  std::map<PositionKey, Third> out;
  for (const auto& v : theta_index(t)) out[position_key(t, v)] = h.at(v);
  return out;
}

}  // namespace hiveweb
