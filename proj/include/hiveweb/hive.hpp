#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hiveweb/surface.hpp"
#include "hiveweb/third.hpp"

namespace hiveweb {

/// The seven quiver values of one ideal triangle, a1..a7 stored at [0..6].
///
/// Reading a triangle with corner 0 as the top corner: a1, a3 lie on side 2
/// (a1 nearer corner 0), a2, a5 on side 0 (a2 nearer corner 0), a7, a6 on
/// side 1 (a7 nearer corner 1, a6 nearer corner 2) and a4 at the center.
struct TriangleHive {
  std::array<Third, 7> a{};

  Third operator[](int label) const { return a.at(label - 1); }

  static TriangleHive from_thirds(const std::array<std::int64_t, 7>& thirds);
  std::array<std::int64_t, 7> thirds() const;

  friend bool operator==(const TriangleHive&, const TriangleHive&) = default;
};

/// The nine rhombus quantities, in the order
///   a1+a2-a4, a3+a4-a1-a6, a4+a5-a2-a7,
///   a5+a7-a4, a2+a4-a1-a5, a4+a6-a3-a7,
///   a3+a6-a4, a4+a7-a5-a6, a1+a4-a2-a3.
std::array<Third, 9> rhombus_differences(const TriangleHive& h);

/// True when all nine rhombus quantities are non-negative integers.
bool satisfies_rhombus(const TriangleHive& h);

/// Quiver vertices a1..a7 of a triangle, in the reading described above.
std::array<ThetaVertexId, 7> triangle_frame(const Triangulation& t, int triangle);

/// An assignment of thirds to quiver vertices.
class Hive {
 public:
  void set(const ThetaVertexId& v, Third value) { values_[v] = value; }

  std::optional<Third> get(const ThetaVertexId& v) const;
  /// Throws IncompleteHive when unassigned.
  Third at(const ThetaVertexId& v) const;

  const std::map<ThetaVertexId, Third>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const Hive&, const Hive&) = default;

 private:
  std::map<ThetaVertexId, Third> values_;
};

/// Throws IncompleteHive when any quiver vertex of t lacks a value.
void require_complete(const Triangulation& t, const Hive& h);

TriangleHive triangle_hive(const Triangulation& t, const Hive& h, int triangle);

struct RhombusViolation {
  int triangle = 0;
  int rhombus = 0;  // index into the rhombus_differences order
  Third value;
};

/// Empty iff h is a hive on t. Throws IncompleteHive on missing values.
std::vector<RhombusViolation> validate_hive(const Triangulation& t, const Hive& h);

/// Throws InvalidHive naming the first violation.
void require_hive(const Triangulation& t, const Hive& h);

/// The four max-plus exchange values (b2, b5, b6, b7) computed from a1..a12.
std::array<Third, 4> octahedron_values(const std::array<Third, 12>& a);

/// Transports a hive across the flip described by the two frames. Only the
/// four new quiver values change.
Hive octahedron_transport(const Hive& h, const QuadFrame& old_frame, const QuadFrame& new_frame);

struct FlippedHive {
  Triangulation triangulation;
  Hive hive;
};

/// flip_triangulation followed by octahedron_transport.
FlippedHive transport_flip(const Triangulation& t, const Hive& h, int edge);

/// max over all triangles and rhombi of -(rhombus quantity).
Third tropical_potential(const Triangulation& t, const Hive& h);

/// True iff every -(rhombus quantity) is an integer <= 0.
bool is_in_positive_cone(const Triangulation& t, const Hive& h);

/// Deterministic hive sampler: visits triangles in spanning-tree order and
/// draws per-triangle web coordinates from the box x in [-bound, bound],
/// corner counts in [0, bound], subject to already-fixed edge values.
Hive sample_hive(const Triangulation& t, int bound, std::uint64_t seed);

/// Hive values keyed by position_key, for comparing hives across flip paths.
std::map<PositionKey, Third> values_by_position(const Triangulation& t, const Hive& h);

}  // namespace hiveweb
