#include "hiveweb/surfacoid.hpp"

#include <string>

namespace hiveweb {

namespace {

std::string mesh_name(std::int64_t p, std::int64_t q) {
  return "m:" + std::to_string(p) + "," + std::to_string(q);
}

// Chain from the mesh corner outward; returns the terminal.
OrientedGraph::Vertex add_string(OrientedGraph& g, OrientedGraph::Vertex corner, const std::string& label,
                                 std::int64_t inward, std::int64_t outward) {
  OrientedGraph::Vertex prev = corner;
  const std::int64_t length = inward + outward;
  for (std::int64_t i = 1; i <= length; ++i) {
    const auto v = g.add_vertex(label + ":" + std::to_string(i));
    if (i <= inward)
      g.add_arc(v, prev);
    else
      g.add_arc(prev, v);
    prev = v;
  }
  return prev;
}

}  // namespace

TriangleNet build_net(const TriangleWebCoords& c) {
  require_valid(c);
  const std::int64_t n = c.x < 0 ? -c.x : c.x;
  if (n > 2000) throw Error(ErrorKind::Malformed, "honeycomb too large for an explicit net");

  TriangleNet net;
  OrientedGraph& g = net.graph;
  for (std::int64_t p = -n; p <= 0; ++p)
    for (std::int64_t q = 0; q <= n + p; ++q) net.mesh.push_back(g.add_vertex(mesh_name(p, q)));

  auto inside = [n](std::int64_t p, std::int64_t q) { return p <= 0 && 0 <= q && q - p <= n; };
  for (std::int64_t p = -n; p <= 0; ++p) {
    for (std::int64_t q = 0; q <= n + p; ++q) {
      const auto from = g.vertex(mesh_name(p, q));
      const std::array<std::pair<std::int64_t, std::int64_t>, 3> targets{{{p + 1, q}, {p, q + 1}, {p - 1, q - 1}}};
      for (auto [tp, tq] : targets) {
        if (!inside(tp, tq)) continue;
        const auto to = g.vertex(mesh_name(tp, tq));
        if (c.x >= 0)
          g.add_arc(from, to);
        else
          g.add_arc(to, from);
      }
    }
  }

  net.top_corner = g.vertex(mesh_name(-n, 0));
  net.left_corner = g.vertex(mesh_name(0, 0));
  net.right_corner = g.vertex(mesh_name(0, n));
  net.top = add_string(g, net.top_corner, "A", c.w, c.v);
  net.left = add_string(g, net.left_corner, "B", c.u, c.t);
  net.right = add_string(g, net.right_corner, "C", c.y, c.z);
  return net;
}

TriangleHive oracle_triangle_hive(const TriangleWebCoords& c) {
  const TriangleNet net = build_net(c);
  const auto from_top = distances_from(net.graph, net.top);
  const auto from_left = distances_from(net.graph, net.left);
  const auto from_right = distances_from(net.graph, net.right);

  TriangleHive h;
  h.a[0] = Third::from_thirds(*from_left[net.top]);    // d(B, A)
  h.a[1] = Third::from_thirds(*from_right[net.top]);   // d(C, A)
  h.a[2] = Third::from_thirds(*from_top[net.left]);    // d(A, B)
  h.a[3] = fermat_brute(net.graph, net.top, net.left, net.right).value;
  h.a[4] = Third::from_thirds(*from_top[net.right]);   // d(A, C)
  h.a[5] = Third::from_thirds(*from_right[net.left]);  // d(C, B)
  h.a[6] = Third::from_thirds(*from_left[net.right]);  // d(B, C)
  return h;
}

}  // namespace hiveweb
