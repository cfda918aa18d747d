#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "hiveweb/hive.hpp"

namespace hiveweb {

/// A reduced web on one triangle: a honeycomb of signed size x and six
/// corner-arc counts. w, v sit at corner 0 (top), y, z at corner 1 (bottom
/// right), u, t at corner 2 (bottom left); the first letter of each pair
/// counts arcs that the inward tripod leg crosses at cost 1/3.
struct TriangleWebCoords {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  std::int64_t t = 0;
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t w = 0;

  friend auto operator<=>(const TriangleWebCoords&, const TriangleWebCoords&) = default;
};

/// Throws InvalidWebCoords when a corner count is negative.
void require_valid(const TriangleWebCoords& c);

TriangleHive web_to_hive_triangle(const TriangleWebCoords& c);

/// Inverse of web_to_hive_triangle; throws InvalidHive unless h satisfies
/// the rhombus condition.
TriangleWebCoords hive_to_web_triangle(const TriangleHive& h);

using SideCounts = std::pair<std::int64_t, std::int64_t>;

/// Oriented strand counts (2 near - far, 2 far - near) through a side whose
/// two quiver values are given. Throws InconsistentSide when either count
/// is negative or fractional.
SideCounts side_arc_counts(Third near, Third far);

/// Counts through side s of a triangle, ordered from corner s to corner s+1.
SideCounts side_counts(const TriangleHive& h, int side);

/// Per-triangle web coordinates over a triangulation.
struct SurfaceWeb {
  std::map<int, TriangleWebCoords> coords;

  friend bool operator==(const SurfaceWeb&, const SurfaceWeb&) = default;
};

/// Throws GluingMismatch when the strand counts of two glued sides disagree.
Hive surface_web_to_hive(const Triangulation& t, const SurfaceWeb& web);

SurfaceWeb hive_to_surface_web(const Triangulation& t, const Hive& h);

}  // namespace hiveweb
