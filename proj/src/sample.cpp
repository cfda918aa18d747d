#include <deque>
#include <string>

#include "hiveweb/hive.hpp"
#include "hiveweb/random.hpp"
#include "hiveweb/web.hpp"

namespace hiveweb {

namespace {

struct BoxEntry {
  TriangleHive hive;
};

std::vector<BoxEntry> box_table(int bound) {
  std::vector<BoxEntry> out;
  TriangleWebCoords c;
  for (c.x = -bound; c.x <= bound; ++c.x)
    for (c.y = 0; c.y <= bound; ++c.y)
      for (c.z = 0; c.z <= bound; ++c.z)
        for (c.t = 0; c.t <= bound; ++c.t)
          for (c.u = 0; c.u <= bound; ++c.u)
            for (c.v = 0; c.v <= bound; ++c.v)
              for (c.w = 0; c.w <= bound; ++c.w) out.push_back({web_to_hive_triangle(c)});
  return out;
}

std::vector<int> spanning_tree_order(const Triangulation& t) {
  std::vector<int> order;
  std::vector<bool> seen(t.triangle_count(), false);
  for (int root = 0; root < t.triangle_count(); ++root) {
    if (seen[root]) continue;
    std::deque<int> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      const int tri = queue.front();
      queue.pop_front();
      order.push_back(tri);
      for (int s = 0; s < 3; ++s) {
        const Edge& e = t.edge(t.edge_at({tri, s}));
        if (e.is_boundary()) continue;
        const int other = e.first.triangle == tri && e.first.side == s ? e.second->triangle : e.first.triangle;
        if (!seen[other]) {
          seen[other] = true;
          queue.push_back(other);
        }
      }
    }
  }
  return order;
}

}  // namespace

Hive sample_hive(const Triangulation& t, int bound, std::uint64_t seed) {
  if (bound < 0) throw Error(ErrorKind::Malformed, "sampling bound must be non-negative");
  t.require_valid();
  for (const Edge& e : t.edges())
    if (!e.is_boundary() && e.first.triangle == e.second->triangle)
      throw Error(ErrorKind::SelfFoldedUnsupported, "edge " + std::to_string(e.id) + " is glued to one triangle");

  const auto table = box_table(bound);
  std::mt19937_64 rng(seed);
  Hive out;
  std::vector<std::size_t> feasible;
  for (int tri : spanning_tree_order(t)) {
    const auto frame = triangle_frame(t, tri);
    std::array<std::optional<Third>, 7> fixed;
    for (std::size_t i = 0; i < 7; ++i) fixed[i] = out.get(frame[i]);

    feasible.clear();
    for (std::size_t k = 0; k < table.size(); ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < 7 && ok; ++i) ok = !fixed[i] || *fixed[i] == table[k].hive.a[i];
      if (ok) feasible.push_back(k);
    }
    if (feasible.empty())
      throw Error(ErrorKind::SamplingFailed, "no web coordinates fit triangle " + std::to_string(tri));

    const TriangleHive& chosen = table[feasible[uniform_int(rng, 0, static_cast<std::int64_t>(feasible.size()) - 1)]].hive;
    for (std::size_t i = 0; i < 7; ++i) out.set(frame[i], chosen.a[i]);
  }
  return out;
}

}  // namespace hiveweb
