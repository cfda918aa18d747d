#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hiveweb/error.hpp"

namespace hiveweb {

/// A slot (triangle, side) of an ideal triangle. Side s spans corners s and
/// s+1 (mod 3), corners listed counterclockwise.
struct SideRef {
  int triangle = 0;
  int side = 0;

  friend constexpr auto operator<=>(const SideRef&, const SideRef&) = default;
};

/// An ideal edge. Interior edges carry two attachments; boundary edges one.
struct Edge {
  int id = 0;
  int tail = 0;
  int head = 0;
  SideRef first;
  std::optional<SideRef> second;

  bool is_boundary() const { return !second.has_value(); }
};

/// Genus, boundary components and marked point count of a decorated surface.
struct Signature {
  int genus = 0;
  int boundary_components = 0;
  int marked_points = 0;

  long expected_triangles() const { return 2L * boundary_components + marked_points + 4L * genus - 4; }
  long expected_edges() const { return 3L * boundary_components + 2L * marked_points + 6L * genus - 6; }
};

using Corners = std::array<int, 3>;

/// A vertex of the quiver: either the center of a triangle or one of the two
/// vertices on an edge. Slot 0 lies nearer the tail of the edge orientation.
struct ThetaVertexId {
  enum class Kind { Center, EdgeVertex };

  Kind kind = Kind::Center;
  int index = 0;
  int slot = 0;

  static constexpr ThetaVertexId center(int triangle) { return {Kind::Center, triangle, 0}; }
  static constexpr ThetaVertexId edge_vertex(int edge, int slot) { return {Kind::EdgeVertex, edge, slot}; }

  bool is_center() const { return kind == Kind::Center; }

  /// "c:{triangle}" or "e:{edge}:{slot}".
  std::string key() const;
  static std::optional<ThetaVertexId> parse(const std::string& key);

  friend constexpr auto operator<=>(const ThetaVertexId&, const ThetaVertexId&) = default;
};

/// Combinatorial ideal triangulation. Values are immutable once built; flips
/// return new triangulations.
///
/// The raw data may be inconsistent: validate_complex() reports problems, and
/// the operations that need a consistent complex check it first.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(std::vector<Corners> corners, std::vector<Edge> edges,
                std::optional<Signature> signature = std::nullopt);

  int triangle_count() const { return static_cast<int>(corners_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Corners>& corners() const { return corners_; }
  const Corners& corners(int triangle) const { return corners_.at(triangle); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }
  const std::optional<Signature>& signature() const { return signature_; }

  /// Edge attached at the side, or -1 when the side is dangling.
  int edge_at(SideRef side) const;

  /// True when the edge runs from corner s to corner s+1 of the side.
  bool side_follows_edge(SideRef side) const;

  /// Quiver vertex on the side nearest the given corner of its triangle; the
  /// corner must be one of the side's two endpoints.
  ThetaVertexId vertex_near(SideRef side, int corner) const;

  int theta_size() const { return 2 * edge_count() + triangle_count(); }

  /// Dense position of a quiver vertex in theta_index() order.
  int theta_position(const ThetaVertexId& v) const;

  /// Throws InvalidTriangulation unless validate_complex() is empty.
  void require_valid() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b);

 private:
  std::vector<Corners> corners_;
  std::vector<Edge> edges_;
  std::optional<Signature> signature_;
  std::vector<std::array<int, 3>> side_edge_;
};

struct ComplexViolation {
  enum class Kind { BadReference, DanglingSide, DoubleAttachment, EndpointMismatch, OrientationMismatch, CountMismatch };

  Kind kind;
  std::string detail;
};

std::string_view to_string(ComplexViolation::Kind kind);

struct ValidationReport {
  std::vector<ComplexViolation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ComplexViolation::Kind kind) const;
};

ValidationReport validate_complex(const Triangulation& t);

/// Triangulation of the convex m-gon with vertices 0..m-1 counterclockwise.
/// Boundary edge i runs i -> i+1 and has id i; diagonal k has id m+k and is
/// oriented from its lower vertex. Triangles are numbered by sorted corner
/// triple; corners start at the lowest vertex.
Triangulation build_polygon(int m, const std::vector<std::pair<int, int>>& diagonals);

/// All centers in triangle order, then (e,0), (e,1) in edge order.
std::vector<ThetaVertexId> theta_index(const Triangulation& t);

/// The twelve quiver vertices around an interior diagonal.
///
/// With the diagonal running Q -> P, triangle (Q,P,R) on its left and (P,Q,S)
/// on its right, labels a1..a12 (stored at [0..11]) are:
///   a6, a2  diagonal vertices near Q and P;  a5, a7  left and right centers;
///   a1, a4  on PR near P and R;             a9, a10 on RQ near R and Q;
///   a3, a8  on SP near P and S;             a12, a11 on QS near S and Q.
/// The post-flip frame keeps every outer label and puts b2, b6 (centers of
/// the new triangles containing P and Q) at [1], [5], and b5, b7 (new
/// diagonal vertices near R and S) at [4], [6].
struct QuadFrame {
  std::array<ThetaVertexId, 12> labels;
  int diagonal = 0;
  int left_triangle = 0;
  int right_triangle = 0;

  const ThetaVertexId& operator[](int label) const { return labels.at(label - 1); }
};

QuadFrame quad_frame(const Triangulation& t, int edge);

struct FlipResult {
  Triangulation triangulation;
  QuadFrame old_frame;
  QuadFrame new_frame;
};

FlipResult flip_triangulation(const Triangulation& t, int edge);

/// Position of a quiver vertex in terms of marked points: the sorted corner
/// triple for a center, (near endpoint, far endpoint, -1) for an edge vertex.
/// Independent of triangle and edge ids, so it identifies the same vertex
/// across flip sequences on a polygon.
using PositionKey = std::array<int, 4>;
PositionKey position_key(const Triangulation& t, const ThetaVertexId& v);

/// The sorted set of diagonals {lo, hi} of a triangulation (boundary excluded).
std::vector<std::pair<int, int>> diagonal_set(const Triangulation& t);

}  // namespace hiveweb
