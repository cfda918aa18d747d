#include <gtest/gtest.h>

#include <set>

#include "hiveweb/surface.hpp"

namespace hiveweb {
namespace {

using Kind = ComplexViolation::Kind;

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Malformed;
}

PositionKey edge_key(int near, int far) { return {1, near, far, 0}; }

TEST(BuildPolygon, Counts) {
  const auto tri = build_polygon(3, {});
  EXPECT_EQ(tri.triangle_count(), 1);
  EXPECT_EQ(tri.edge_count(), 3);
  EXPECT_EQ(tri.theta_size(), 7);

  const auto quad = build_polygon(4, {{0, 2}});
  EXPECT_EQ(quad.triangle_count(), 2);
  EXPECT_EQ(quad.edge_count(), 5);
  EXPECT_EQ(quad.theta_size(), 12);

  const auto pent = build_polygon(5, {{0, 2}, {0, 3}});
  EXPECT_EQ(pent.triangle_count(), 3);
  EXPECT_EQ(pent.edge_count(), 7);
  EXPECT_EQ(pent.theta_size(), 17);
}

TEST(BuildPolygon, RejectsBadDiagonals) {
  EXPECT_EQ(error_kind([] { build_polygon(4, {}); }), ErrorKind::InvalidPolygonTriangulation);
  EXPECT_EQ(error_kind([] { build_polygon(4, {{0, 2}, {1, 3}}); }), ErrorKind::InvalidPolygonTriangulation);
  EXPECT_EQ(error_kind([] { build_polygon(5, {{0, 2}, {1, 3}}); }), ErrorKind::InvalidPolygonTriangulation);
  EXPECT_EQ(error_kind([] { build_polygon(5, {{0, 1}, {0, 3}}); }), ErrorKind::InvalidPolygonTriangulation);
  EXPECT_EQ(error_kind([] { build_polygon(2, {}); }), ErrorKind::InvalidPolygonTriangulation);
  EXPECT_EQ(error_kind([] { build_polygon(5, {{0, 2}, {2, 0}}); }), ErrorKind::InvalidPolygonTriangulation);
}

TEST(BuildPolygon, OrientationConventions) {
  const auto hex = build_polygon(6, {{0, 2}, {0, 3}, {3, 5}});
  for (const Edge& e : hex.edges()) {
    if (e.is_boundary()) {
      EXPECT_EQ(e.head, (e.tail + 1) % 6);
      EXPECT_TRUE(hex.side_follows_edge(e.first));
    } else {
      EXPECT_LT(e.tail, e.head);
    }
  }
}

TEST(ValidateComplex, SingleTriangleIsClean) {
  EXPECT_TRUE(validate_complex(build_polygon(3, {})).ok());
}

TEST(ValidateComplex, DoubleAttachment) {
  const auto quad = build_polygon(4, {{0, 2}});
  auto edges = quad.edges();
  edges.push_back(Edge{5, 0, 1, edges[0].first, std::nullopt});
  const Triangulation broken(quad.corners(), edges);
  const auto report = validate_complex(broken);
  EXPECT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.count(Kind::DoubleAttachment), 1u);
}

TEST(ValidateComplex, DanglingSide) {
  const auto quad = build_polygon(4, {{0, 2}});
  auto edges = quad.edges();
  edges.pop_back();
  const Triangulation broken(quad.corners(), edges);
  EXPECT_EQ(validate_complex(broken).count(Kind::DanglingSide), 2u);
}

TEST(ValidateComplex, SignatureCounts) {
  const auto quad = build_polygon(4, {{0, 2}});
  ASSERT_TRUE(quad.signature().has_value());
  EXPECT_EQ(quad.signature()->expected_triangles(), 2);
  EXPECT_EQ(quad.signature()->expected_edges(), 5);
  EXPECT_TRUE(validate_complex(quad).ok());

  const Triangulation wrong(quad.corners(), quad.edges(), Signature{0, 1, 5});
  EXPECT_EQ(validate_complex(wrong).count(Kind::CountMismatch), 2u);
}

TEST(ValidateComplex, GluingMustReverseDirection) {
  const auto quad = build_polygon(4, {{0, 2}});
  auto corners = quad.corners();
  corners[1] = {2, 0, 3};  // traverse the diagonal the same way in both triangles
  auto edges = quad.edges();
  const Triangulation broken(corners, edges);
  const auto report = validate_complex(broken);
  EXPECT_FALSE(report.ok());
  EXPECT_GE(report.count(Kind::EndpointMismatch) + report.count(Kind::OrientationMismatch), 1u);
}

TEST(ThetaIndex, OrderAndSize) {
  const auto pent = build_polygon(5, {{0, 2}, {0, 3}});
  const auto theta = theta_index(pent);
  ASSERT_EQ(theta.size(), 17u);
  EXPECT_EQ(theta[0].key(), "c:0");
  EXPECT_EQ(theta[2].key(), "c:2");
  EXPECT_EQ(theta[3].key(), "e:0:0");
  EXPECT_EQ(theta[4].key(), "e:0:1");
  EXPECT_EQ(theta[16].key(), "e:6:1");
  EXPECT_EQ(theta, theta_index(build_polygon(5, {{0, 2}, {0, 3}})));
  for (std::size_t i = 0; i < theta.size(); ++i) EXPECT_EQ(pent.theta_position(theta[i]), static_cast<int>(i));
  EXPECT_EQ(std::set<ThetaVertexId>(theta.begin(), theta.end()).size(), theta.size());
}

TEST(ThetaVertexId, KeysRoundTrip) {
  for (const auto& v : {ThetaVertexId::center(4), ThetaVertexId::edge_vertex(3, 1)})
    EXPECT_EQ(ThetaVertexId::parse(v.key()), v);
  EXPECT_FALSE(ThetaVertexId::parse("e:3:2"));
  EXPECT_FALSE(ThetaVertexId::parse("x:1"));
  EXPECT_FALSE(ThetaVertexId::parse("c:"));
}

TEST(QuadFrame, MatchesTheQuadrilateralLayout) {
  // Diagonal 0 -> 2, so Q = 0, P = 2; the left triangle is (0,2,3), R = 3, S = 1.
  const auto quad = build_polygon(4, {{0, 2}});
  const QuadFrame f = quad_frame(quad, 4);
  auto key = [&](int label) { return position_key(quad, f[label]); };
  EXPECT_EQ(key(6), edge_key(0, 2));
  EXPECT_EQ(key(2), edge_key(2, 0));
  EXPECT_EQ(key(5), (PositionKey{0, 0, 2, 3}));
  EXPECT_EQ(key(7), (PositionKey{0, 0, 1, 2}));
  EXPECT_EQ(key(1), edge_key(2, 3));
  EXPECT_EQ(key(4), edge_key(3, 2));
  EXPECT_EQ(key(9), edge_key(3, 0));
  EXPECT_EQ(key(10), edge_key(0, 3));
  EXPECT_EQ(key(3), edge_key(2, 1));
  EXPECT_EQ(key(8), edge_key(1, 2));
  EXPECT_EQ(key(12), edge_key(1, 0));
  EXPECT_EQ(key(11), edge_key(0, 1));
}

TEST(FlipTriangulation, Quadrilateral) {
  const auto quad = build_polygon(4, {{0, 2}});
  const auto flip = flip_triangulation(quad, 4);
  EXPECT_TRUE(validate_complex(flip.triangulation).ok());
  EXPECT_EQ(diagonal_set(flip.triangulation), (std::vector<std::pair<int, int>>{{1, 3}}));

  const auto& t = flip.triangulation;
  auto key = [&](int label) { return position_key(t, flip.new_frame[label]); };
  EXPECT_EQ(key(5), edge_key(3, 1));  // b5 near R
  EXPECT_EQ(key(7), edge_key(1, 3));  // b7 near S
  EXPECT_EQ(key(2), (PositionKey{0, 1, 2, 3}));
  EXPECT_EQ(key(6), (PositionKey{0, 0, 1, 3}));
  for (int label : {1, 3, 4, 8, 9, 10, 11, 12}) EXPECT_EQ(flip.new_frame[label], flip.old_frame[label]);
}

TEST(FlipTriangulation, TwiceRestoresTheComplex) {
  const auto hex = build_polygon(6, {{0, 2}, {0, 3}, {3, 5}});
  for (const Edge& e : hex.edges()) {
    if (e.is_boundary()) continue;
    const auto once = flip_triangulation(hex, e.id);
    const auto twice = flip_triangulation(once.triangulation, e.id);
    EXPECT_EQ(diagonal_set(twice.triangulation), diagonal_set(hex));
    EXPECT_TRUE(validate_complex(twice.triangulation).ok());
    // Same quiver vertex positions under the same ids.
    for (const auto& v : theta_index(hex)) {
      if (v.is_center()) continue;
      EXPECT_EQ(position_key(twice.triangulation, v), position_key(hex, v)) << v.key();
    }
    // The second flip's frame is the first one with the pre-flip labels.
    std::set<PositionKey> before, after;
    for (const auto& v : once.old_frame.labels) before.insert(position_key(hex, v));
    for (const auto& v : twice.new_frame.labels) after.insert(position_key(twice.triangulation, v));
    EXPECT_EQ(before, after);
  }
}

TEST(FlipTriangulation, Errors) {
  const auto quad = build_polygon(4, {{0, 2}});
  EXPECT_EQ(error_kind([&] { flip_triangulation(quad, 0); }), ErrorKind::NotFlippable);

  // One triangle with two of its sides glued together.
  std::vector<Edge> edges{Edge{0, 0, 1, {0, 0}, SideRef{0, 1}}, Edge{1, 0, 0, {0, 2}, std::nullopt}};
  const Triangulation folded({{0, 1, 0}}, edges);
  ASSERT_TRUE(validate_complex(folded).ok());
  EXPECT_EQ(error_kind([&] { flip_triangulation(folded, 0); }), ErrorKind::SelfFoldedUnsupported);
}

TEST(QuadFrame, LabelsAreDistinct) {
  const auto hex = build_polygon(6, {{0, 2}, {0, 3}, {3, 5}});
  for (const Edge& e : hex.edges()) {
    if (e.is_boundary()) continue;
    const auto f = quad_frame(hex, e.id);
    EXPECT_EQ(std::set<ThetaVertexId>(f.labels.begin(), f.labels.end()).size(), 12u);
  }
}

}  // namespace
}  // namespace hiveweb
