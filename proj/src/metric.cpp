#include "hiveweb/metric.hpp"

#include <array>

namespace hiveweb {

OrientedGraph::Vertex OrientedGraph::add_vertex(const std::string& name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const Vertex v = vertex_count();
  names_.push_back(name);
  index_.emplace(name, v);
  steps_.emplace_back();
  return v;
}

void OrientedGraph::add_arc(Vertex tail, Vertex head) {
  if (tail < 0 || head < 0 || tail >= vertex_count() || head >= vertex_count())
    throw Error(ErrorKind::UnknownVertex, "arc endpoint out of range");
  arcs_.emplace_back(tail, head);
  steps_[tail].emplace_back(head, 1);
  steps_[head].emplace_back(tail, 2);
}

void OrientedGraph::add_arc(const std::string& tail, const std::string& head) { add_arc(vertex(tail), vertex(head)); }

std::optional<OrientedGraph::Vertex> OrientedGraph::find(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

OrientedGraph::Vertex OrientedGraph::vertex(const std::string& name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorKind::UnknownVertex, "no vertex named '" + name + "'");
}

OrientedGraph OrientedGraph::reversed() const {
  OrientedGraph g;
  for (const auto& n : names_) g.add_vertex(n);
  for (const auto& [tail, head] : arcs_) g.add_arc(head, tail);
  return g;
}

std::vector<std::optional<std::int64_t>> distances_from(const OrientedGraph& g, OrientedGraph::Vertex source) {
  if (source < 0 || source >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "source out of range");
  // Dial's algorithm: step costs are 1 or 2, so three rotating buckets suffice.
  std::vector<std::optional<std::int64_t>> dist(g.vertex_count());
  std::array<std::vector<OrientedGraph::Vertex>, 3> buckets;
  dist[source] = 0;
  buckets[0].push_back(source);
  std::size_t pending = 1;
  for (std::int64_t d = 0; pending > 0; ++d) {
    auto& bucket = buckets[d % 3];
    // Entries at cost d never add to the current bucket (costs are >= 1).
    std::vector<OrientedGraph::Vertex> current;
    current.swap(bucket);
    pending -= current.size();
    for (OrientedGraph::Vertex v : current) {
      if (*dist[v] != d) continue;  // stale
      for (const auto& [next, cost] : g.steps(v)) {
        const std::int64_t nd = d + cost;
        if (!dist[next] || nd < *dist[next]) {
          dist[next] = nd;
          buckets[nd % 3].push_back(next);
          ++pending;
        }
      }
    }
  }
  return dist;
}

Third shortest_distance(const OrientedGraph& g, OrientedGraph::Vertex from, OrientedGraph::Vertex to) {
  if (to < 0 || to >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "target out of range");
  const auto dist = distances_from(g, from);
  if (!dist[to]) throw Error(ErrorKind::Unreachable, g.name(to) + " is unreachable from " + g.name(from));
  return Third::from_thirds(*dist[to]);
}

Third gamma_distance(LatticePoint p) {
  using namespace detail;
  const std::int64_t a = checked_add(p.x, p.y);
  const std::int64_t b = checked_sub(p.y, checked_mul(2, p.x));
  const std::int64_t c = checked_sub(p.x, checked_mul(2, p.y));
  return Third::from_thirds(std::max({a, b, c}));
}

OrientedGraph::Vertex GammaWindow::vertex(LatticePoint p) const {
  if (!contains(p)) throw Error(ErrorKind::UnknownVertex, "point outside the window");
  return static_cast<OrientedGraph::Vertex>((p.y - y_min) * (x_max - x_min + 1) + (p.x - x_min));
}

LatticePoint GammaWindow::point(OrientedGraph::Vertex v) const {
  const std::int64_t width = x_max - x_min + 1;
  return {x_min + v % width, y_min + v / width};
}

GammaWindow gamma_window(std::int64_t x_min, std::int64_t x_max, std::int64_t y_min, std::int64_t y_max) {
  if (x_min > x_max || y_min > y_max) throw Error(ErrorKind::Malformed, "empty window");
  if ((x_max - x_min + 1) * (y_max - y_min + 1) > 4'000'000) throw Error(ErrorKind::Malformed, "window too large");
  GammaWindow w{x_min, x_max, y_min, y_max, {}};
  for (std::int64_t y = y_min; y <= y_max; ++y)
    for (std::int64_t x = x_min; x <= x_max; ++x) w.graph.add_vertex(std::to_string(x) + "," + std::to_string(y));
  for (std::int64_t y = y_min; y <= y_max; ++y) {
    for (std::int64_t x = x_min; x <= x_max; ++x) {
      const auto from = w.vertex({x, y});
      for (LatticePoint to : {LatticePoint{x + 1, y}, LatticePoint{x, y + 1}, LatticePoint{x - 1, y - 1}})
        if (w.contains(to)) w.graph.add_arc(from, w.vertex(to));
    }
  }
  return w;
}

GammaWindow gamma_window(std::int64_t radius) { return gamma_window(-radius, radius, -radius, radius); }

bool omega_contains(const FermatSpec& f, LatticePoint p) {
  const std::int64_t diff = p.y - p.x;
  return f.a.x <= p.x && p.x <= f.b.x && f.a.y <= p.y && p.y <= f.c.y && f.b.y - f.b.x <= diff &&
         diff <= f.c.y - f.c.x;
}

bool omega_nonempty(const FermatSpec& f) {
  const std::int64_t lo_diff = f.b.y - f.b.x;
  const std::int64_t hi_diff = f.c.y - f.c.x;
  if (lo_diff > hi_diff || f.a.y > f.c.y) return false;
  // y ranges over [max(a.y, x + lo_diff), min(c.y, x + hi_diff)].
  const std::int64_t x_lo = std::max(f.a.x, f.a.y - hi_diff);
  const std::int64_t x_hi = std::min(f.b.x, f.c.y - lo_diff);
  return x_lo <= x_hi;
}

Third fermat_closed_form(const FermatSpec& f) {
  if (!omega_nonempty(f)) throw Error(ErrorKind::OmegaEmpty, "the minimizing region is empty");
  using namespace detail;
  std::int64_t v = 0;
  v = checked_sub(v, f.a.x);
  v = checked_sub(v, f.a.y);
  v = checked_add(v, checked_mul(2, f.b.x));
  v = checked_sub(v, f.b.y);
  v = checked_sub(v, f.c.x);
  v = checked_add(v, checked_mul(2, f.c.y));
  return Third::from_thirds(v);
}

FermatResult fermat_brute(const OrientedGraph& g, OrientedGraph::Vertex a, OrientedGraph::Vertex b,
                          OrientedGraph::Vertex c) {
  const auto da = distances_from(g, a);
  const auto db = distances_from(g, b);
  const auto dc = distances_from(g, c);
  std::optional<std::int64_t> best;
  std::vector<OrientedGraph::Vertex> argmin;
  for (OrientedGraph::Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!da[x] || !db[x] || !dc[x]) continue;
    const std::int64_t total = *da[x] + *db[x] + *dc[x];
    if (!best || total < *best) {
      best = total;
      argmin.clear();
    }
    if (total == *best) argmin.push_back(x);
  }
  if (!best) throw Error(ErrorKind::Unreachable, "no vertex is reachable from all three terminals");
  return {Third::from_thirds(*best), std::move(argmin)};
}

}  // namespace hiveweb
