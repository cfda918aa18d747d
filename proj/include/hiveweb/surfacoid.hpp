#pragma once

#include "hiveweb/metric.hpp"
#include "hiveweb/web.hpp"

namespace hiveweb {

/// Dual graph of a reduced web on a triangle: a mesh of oriented 3-cycles
/// with three strings running out to the terminals.
///
/// The mesh of size n = |x| is the lattice graph restricted to
/// {(p, q) : p <= 0 <= q, q - p <= n} (all arcs reversed when x < 0), with
/// corners top' = (-n, 0), left' = (0, 0), right' = (0, n). Each string is a
/// chain whose arcs point toward the mesh (w, u, y of them) or away from it
/// (v, t, z) for the top, bottom-left and bottom-right corners.
struct TriangleNet {
  OrientedGraph graph;
  OrientedGraph::Vertex top = 0;    // A
  OrientedGraph::Vertex left = 0;   // B, bottom left
  OrientedGraph::Vertex right = 0;  // C, bottom right
  OrientedGraph::Vertex top_corner = 0;
  OrientedGraph::Vertex left_corner = 0;
  OrientedGraph::Vertex right_corner = 0;
  std::vector<OrientedGraph::Vertex> mesh;
};

TriangleNet build_net(const TriangleWebCoords& c);

/// Recomputes the triangle hive of c from distances on its net alone.
TriangleHive oracle_triangle_hive(const TriangleWebCoords& c);

}  // namespace hiveweb
