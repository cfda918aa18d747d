#include <gtest/gtest.h>

#include <random>

#include "hiveweb/surfacoid.hpp"
#include "oracles.hpp"

namespace hiveweb {
namespace {

TEST(BuildNet, VertexCounts) {
  EXPECT_EQ(build_net({}).graph.vertex_count(), 1);
  EXPECT_EQ(build_net({1, 0, 0, 0, 0, 0, 0}).graph.vertex_count(), 3);
  EXPECT_EQ(build_net({-1, 0, 0, 0, 0, 0, 0}).graph.vertex_count(), 3);
  const TriangleNet fig = build_net({3, 2, 1, 1, 1, 1, 1});
  EXPECT_EQ(fig.graph.vertex_count(), 17);
  EXPECT_EQ(fig.mesh.size(), 10u);
}

TEST(BuildNet, ZeroNetCollapsesTerminals) {
  const TriangleNet net = build_net({});
  EXPECT_EQ(net.top, net.left);
  EXPECT_EQ(net.left, net.right);
}

TEST(BuildNet, StringArcsPointTheRightWay) {
  // One inward arc on the top string, one outward on the bottom left.
  const TriangleNet net = build_net({0, 0, 0, 1, 0, 0, 1});
  EXPECT_EQ(shortest_distance(net.graph, net.top, net.top_corner).thirds(), 1);
  EXPECT_EQ(shortest_distance(net.graph, net.left_corner, net.left).thirds(), 1);
}

TEST(Oracle, Examples) {
  for (const TriangleWebCoords& c : {TriangleWebCoords{}, TriangleWebCoords{3, 2, 1, 1, 1, 1, 1},
                                     TriangleWebCoords{-2, 0, 1, 0, 2, 0, 0}, TriangleWebCoords{1, 0, 0, 0, 0, 0, 0}})
    EXPECT_EQ(oracle_triangle_hive(c), web_to_hive_triangle(c));
  EXPECT_EQ(oracle_triangle_hive({3, 2, 1, 1, 1, 1, 1}).thirds(),
            (std::array<std::int64_t, 7>{12, 10, 9, 19, 14, 13, 11}));
}

TEST(Oracle, FermatOnTheSmallestMesh) {
  const TriangleNet net = build_net({1, 0, 0, 0, 0, 0, 0});
  const auto r = fermat_brute(net.graph, net.top, net.left, net.right);
  EXPECT_EQ(r.value.thirds(), 3);
  EXPECT_EQ(r.argmin.size(), 3u);
}

TEST(Oracle, MeshRestrictedMinimumIsTheSame) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> xd(-3, 3), cd(0, 2);
  for (int i = 0; i < 100; ++i) {
    const TriangleWebCoords c{xd(rng), cd(rng), cd(rng), cd(rng), cd(rng), cd(rng), cd(rng)};
    const TriangleNet net = build_net(c);
    const auto oracle = testing::floyd_warshall(net.graph);
    std::optional<std::int64_t> best;
    for (const auto v : net.mesh) {
      const std::int64_t s = *oracle[net.top][v] + *oracle[net.left][v] + *oracle[net.right][v];
      if (!best || s < *best) best = s;
    }
    EXPECT_EQ(fermat_brute(net.graph, net.top, net.left, net.right).value.thirds(), *best);
  }
}

TEST(Oracle, PathFromBToADecomposesArcByArc) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> xd(-3, 3), cd(0, 2);
  for (int i = 0; i < 200; ++i) {
    const TriangleWebCoords c{xd(rng), cd(rng), cd(rng), cd(rng), cd(rng), cd(rng), cd(rng)};
    const TriangleNet net = build_net(c);
    const auto oracle = testing::floyd_warshall(net.graph);
    // Toward the mesh along B's string: u arcs forward, t arcs backward.
    const std::int64_t leave_b = c.u + 2 * c.t;
    // Away from the mesh along A's string: v arcs forward, w arcs backward.
    const std::int64_t enter_a = c.v + 2 * c.w;
    const std::int64_t across = *oracle[net.left_corner][net.top_corner];
    EXPECT_EQ(across, std::max(2 * c.x, -c.x));
    EXPECT_EQ(*oracle[net.left][net.top], leave_b + across + enter_a);
  }
}

TEST(Oracle, AgreesWithClosedFormOnRandomCoords) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> xd(-4, 4), cd(0, 3);
  for (int i = 0; i < 1000; ++i) {
    const TriangleWebCoords c{xd(rng), cd(rng), cd(rng), cd(rng), cd(rng), cd(rng), cd(rng)};
    ASSERT_EQ(oracle_triangle_hive(c), web_to_hive_triangle(c));
  }
}

}  // namespace
}  // namespace hiveweb
