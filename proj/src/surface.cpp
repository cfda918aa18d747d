#include "hiveweb/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hiveweb/error.hpp"

namespace hiveweb {

namespace {

constexpr int next(int s) { return (s + 1) % 3; }

bool valid_ref(const SideRef& r, int triangles) {
  return r.triangle >= 0 && r.triangle < triangles && r.side >= 0 && r.side < 3;
}

std::string describe(const SideRef& r) {
  return "(" + std::to_string(r.triangle) + "," + std::to_string(r.side) + ")";
}

}  // namespace

std::string ThetaVertexId::key() const {
  if (kind == Kind::Center) return "c:" + std::to_string(index);
  return "e:" + std::to_string(index) + ":" + std::to_string(slot);
}

std::optional<ThetaVertexId> ThetaVertexId::parse(const std::string& key) {
  auto parse_int = [](const std::string& s, int& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
      out = std::stoi(s, &pos);
    } catch (...) {
      return false;
    }
    return pos == s.size() && out >= 0;
  };
  if (key.size() > 2 && key.rfind("c:", 0) == 0) {
    int t;
    if (!parse_int(key.substr(2), t)) return std::nullopt;
    return center(t);
  }
  if (key.size() > 2 && key.rfind("e:", 0) == 0) {
    const auto rest = key.substr(2);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return std::nullopt;
    int e, s;
    if (!parse_int(rest.substr(0, colon), e) || !parse_int(rest.substr(colon + 1), s) || s > 1) return std::nullopt;
    return edge_vertex(e, s);
  }
  return std::nullopt;
}

Triangulation::Triangulation(std::vector<Corners> corners, std::vector<Edge> edges,
                             std::optional<Signature> signature)
    : corners_(std::move(corners)), edges_(std::move(edges)), signature_(signature) {
  side_edge_.assign(corners_.size(), {-1, -1, -1});
  const int f = triangle_count();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    for (const SideRef* r : {&e.first, e.second ? &*e.second : nullptr}) {
      if (r == nullptr || !valid_ref(*r, f)) continue;
      int& slot = side_edge_[r->triangle][r->side];
      if (slot < 0) slot = static_cast<int>(i);
    }
  }
}

int Triangulation::edge_at(SideRef side) const {
  if (!valid_ref(side, triangle_count())) return -1;
  return side_edge_[side.triangle][side.side];
}

bool Triangulation::side_follows_edge(SideRef side) const {
  const int e = edge_at(side);
  if (e < 0) throw Error(ErrorKind::InvalidTriangulation, "dangling side " + describe(side));
  const Corners& c = corners_[side.triangle];
  return edges_[e].tail == c[side.side] && edges_[e].head == c[next(side.side)];
}

ThetaVertexId Triangulation::vertex_near(SideRef side, int corner) const {
  corner = ((corner % 3) + 3) % 3;
  const int e = edge_at(side);
  if (e < 0) throw Error(ErrorKind::InvalidTriangulation, "dangling side " + describe(side));
  const bool at_start = corner == side.side;
  if (!at_start && corner != next(side.side))
    throw Error(ErrorKind::InvalidTriangulation, "corner is not an endpoint of side " + describe(side));
  const bool follows = side_follows_edge(side);
  return ThetaVertexId::edge_vertex(e, at_start == follows ? 0 : 1);
}

int Triangulation::theta_position(const ThetaVertexId& v) const {
  if (v.is_center()) return v.index;
  return triangle_count() + 2 * v.index + v.slot;
}

void Triangulation::require_valid() const {
  const auto report = validate_complex(*this);
  if (!report.ok())
    throw Error(ErrorKind::InvalidTriangulation,
                std::string(to_string(report.violations.front().kind)) + ": " + report.violations.front().detail);
}

bool operator==(const Triangulation& a, const Triangulation& b) {
  if (a.corners_ != b.corners_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head || x.first != y.first || x.second != y.second) return false;
  }
  const auto& sa = a.signature_;
  const auto& sb = b.signature_;
  if (sa.has_value() != sb.has_value()) return false;
  return !sa || (sa->genus == sb->genus && sa->boundary_components == sb->boundary_components &&
                 sa->marked_points == sb->marked_points);
}

std::string_view to_string(ComplexViolation::Kind kind) {
  switch (kind) {
    case ComplexViolation::Kind::BadReference: return "BadReference";
    case ComplexViolation::Kind::DanglingSide: return "DanglingSide";
    case ComplexViolation::Kind::DoubleAttachment: return "DoubleAttachment";
    case ComplexViolation::Kind::EndpointMismatch: return "EndpointMismatch";
    case ComplexViolation::Kind::OrientationMismatch: return "OrientationMismatch";
    case ComplexViolation::Kind::CountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

std::size_t ValidationReport::count(ComplexViolation::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [kind](const auto& v) { return v.kind == kind; }));
}

ValidationReport validate_complex(const Triangulation& t) {
  using Kind = ComplexViolation::Kind;
  ValidationReport report;
  auto add = [&report](Kind k, std::string detail) { report.violations.push_back({k, std::move(detail)}); };

  const int f = t.triangle_count();
  std::vector<std::array<int, 3>> uses(f, {0, 0, 0});

  // Returns +1 when the side runs tail -> head, -1 when head -> tail, 0 otherwise.
  auto direction = [&t](const Edge& e, const SideRef& r) {
    const Corners& c = t.corners(r.triangle);
    if (c[r.side] == e.tail && c[next(r.side)] == e.head) return 1;
    if (c[r.side] == e.head && c[next(r.side)] == e.tail) return -1;
    return 0;
  };

  for (int i = 0; i < t.edge_count(); ++i) {
    const Edge& e = t.edge(i);
    const std::string name = "edge " + std::to_string(i);
    if (e.id != i) add(Kind::BadReference, name + " has id " + std::to_string(e.id));

    std::vector<SideRef> refs{e.first};
    if (e.second) refs.push_back(*e.second);
    bool refs_ok = true;
    for (const SideRef& r : refs) {
      if (!valid_ref(r, f)) {
        add(Kind::BadReference, name + " attaches to nonexistent side " + describe(r));
        refs_ok = false;
      }
    }
    if (!refs_ok) continue;
    if (refs.size() == 2 && refs[0] == refs[1]) {
      add(Kind::DoubleAttachment, name + " attaches twice to side " + describe(refs[0]));
      continue;
    }
    for (const SideRef& r : refs) ++uses[r.triangle][r.side];

    std::vector<int> dirs;
    for (const SideRef& r : refs) {
      const int d = direction(e, r);
      if (d == 0) add(Kind::EndpointMismatch, name + " endpoints differ from the corners of side " + describe(r));
      dirs.push_back(d);
    }
    if (dirs.size() == 2 && dirs[0] != 0 && dirs[1] != 0 && dirs[0] == dirs[1])
      add(Kind::OrientationMismatch, name + " glues sides " + describe(refs[0]) + " and " + describe(refs[1]) +
                                         " without reversing direction");
  }

  for (int tri = 0; tri < f; ++tri) {
    for (int s = 0; s < 3; ++s) {
      const SideRef r{tri, s};
      if (uses[tri][s] == 0) add(Kind::DanglingSide, "side " + describe(r) + " has no edge");
      if (uses[tri][s] > 1) add(Kind::DoubleAttachment, "side " + describe(r) + " has " +
                                                            std::to_string(uses[tri][s]) + " edges");
    }
  }

  if (const auto& sig = t.signature()) {
    if (sig->expected_triangles() != f)
      add(Kind::CountMismatch, "expected " + std::to_string(sig->expected_triangles()) + " triangles, found " +
                                   std::to_string(f));
    if (sig->expected_edges() != t.edge_count())
      add(Kind::CountMismatch, "expected " + std::to_string(sig->expected_edges()) + " edges, found " +
                                   std::to_string(t.edge_count()));
  }
  return report;
}

Triangulation build_polygon(int m, const std::vector<std::pair<int, int>>& diagonals) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidPolygonTriangulation, msg); };
  if (m < 3) fail("a polygon needs at least 3 vertices");

  std::set<std::pair<int, int>> diag;
  for (auto [a, b] : diagonals) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) fail("diagonal endpoint out of range");
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 0 && b == m - 1)) fail("diagonal (" + std::to_string(a) + "," + std::to_string(b) +
                                                   ") is a boundary edge");
    if (!diag.insert({a, b}).second) fail("repeated diagonal");
  }
  for (auto it = diag.begin(); it != diag.end(); ++it) {
    for (auto jt = std::next(it); jt != diag.end(); ++jt) {
      const auto [a, b] = *it;
      const auto [c, d] = *jt;
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) fail("diagonals cross");
    }
  }
  if (static_cast<int>(diag.size()) != m - 3)
    fail("expected " + std::to_string(m - 3) + " diagonals, got " + std::to_string(diag.size()));

  auto adjacent = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return b - a == 1 || (a == 0 && b == m - 1) || diag.count({a, b}) > 0;
  };

  std::vector<Corners> corners;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k)) corners.push_back({i, j, k});

  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> edge_of;
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    edges.push_back(Edge{i, i, j, {}, std::nullopt});
    edge_of[{std::min(i, j), std::max(i, j)}] = i;
  }
  for (const auto& [a, b] : diag) {
    const int id = static_cast<int>(edges.size());
    edges.push_back(Edge{id, a, b, {}, std::nullopt});
    edge_of[{a, b}] = id;
  }

  std::vector<int> seen(edges.size(), 0);
  for (int tri = 0; tri < static_cast<int>(corners.size()); ++tri) {
    for (int s = 0; s < 3; ++s) {
      int a = corners[tri][s], b = corners[tri][next(s)];
      const int id = edge_of.at({std::min(a, b), std::max(a, b)});
      if (seen[id]++ == 0)
        edges[id].first = {tri, s};
      else
        edges[id].second = SideRef{tri, s};
    }
  }
  return Triangulation(std::move(corners), std::move(edges), Signature{0, 1, m});
}

std::vector<ThetaVertexId> theta_index(const Triangulation& t) {
  std::vector<ThetaVertexId> out;
  out.reserve(t.theta_size());
  for (int tri = 0; tri < t.triangle_count(); ++tri) out.push_back(ThetaVertexId::center(tri));
  for (int e = 0; e < t.edge_count(); ++e) {
    out.push_back(ThetaVertexId::edge_vertex(e, 0));
    out.push_back(ThetaVertexId::edge_vertex(e, 1));
  }
  return out;
}

QuadFrame quad_frame(const Triangulation& t, int edge) {
  if (edge < 0 || edge >= t.edge_count()) throw Error(ErrorKind::Malformed, "no edge " + std::to_string(edge));
  const Edge& e = t.edge(edge);
  if (e.is_boundary()) throw Error(ErrorKind::NotFlippable, "edge " + std::to_string(edge) + " is a boundary edge");
  if (e.first.triangle == e.second->triangle)
    throw Error(ErrorKind::SelfFoldedUnsupported, "edge " + std::to_string(edge) + " is glued to one triangle");

  SideRef left = e.first;
  SideRef right = *e.second;
  const bool first_follows = t.side_follows_edge(left);
  const bool second_follows = t.side_follows_edge(right);
  if (first_follows == second_follows)
    throw Error(ErrorKind::InvalidTriangulation, "edge " + std::to_string(edge) + " is not glued with reversal");
  if (!first_follows) std::swap(left, right);

  const int tl = left.triangle, sl = left.side;
  const int tr = right.triangle, sr = right.side;
  const SideRef pr{tl, next(sl)}, rq{tl, next(next(sl))};
  const SideRef qs{tr, next(sr)}, sp{tr, next(next(sr))};

  QuadFrame f;
  f.diagonal = edge;
  f.left_triangle = tl;
  f.right_triangle = tr;
  auto& a = f.labels;
  a[0] = t.vertex_near(pr, sl + 1);
  a[1] = ThetaVertexId::edge_vertex(edge, 1);
  a[2] = t.vertex_near(sp, sr);
  a[3] = t.vertex_near(pr, sl + 2);
  a[4] = ThetaVertexId::center(tl);
  a[5] = ThetaVertexId::edge_vertex(edge, 0);
  a[6] = ThetaVertexId::center(tr);
  a[7] = t.vertex_near(sp, sr + 2);
  a[8] = t.vertex_near(rq, sl + 2);
  a[9] = t.vertex_near(rq, sl);
  a[10] = t.vertex_near(qs, sr + 1);
  a[11] = t.vertex_near(qs, sr + 2);
  return f;
}

FlipResult flip_triangulation(const Triangulation& t, int edge) {
  t.require_valid();
  const QuadFrame old_frame = quad_frame(t, edge);
  const int tl = old_frame.left_triangle, tr = old_frame.right_triangle;

  const Edge& diag = t.edge(edge);
  const SideRef left = t.side_follows_edge(diag.first) ? diag.first : *diag.second;
  const SideRef right = t.side_follows_edge(diag.first) ? *diag.second : diag.first;
  const int sl = left.side, sr = right.side;
  const int q = t.corners(tl)[sl], p = t.corners(tl)[next(sl)], r = t.corners(tl)[next(next(sl))];
  const int s = t.corners(tr)[next(next(sr))];

  // The old left triangle id stays on the left of the new diagonal, which
  // runs low to high. Flipping the same edge again then restores every id.
  const bool tail_r = r < s;
  const int tp = tail_r ? tl : tr;  // the new triangle R,S,P
  const int tq = tail_r ? tr : tl;  // the new triangle S,R,Q
  std::vector<Corners> corners = t.corners();
  corners[tp] = {r, s, p};
  corners[tq] = {s, r, q};

  std::map<SideRef, SideRef> moved{
      {SideRef{tr, next(next(sr))}, SideRef{tp, 1}},  // SP
      {SideRef{tl, next(sl)}, SideRef{tp, 2}},        // PR
      {SideRef{tl, next(next(sl))}, SideRef{tq, 1}},  // RQ
      {SideRef{tr, next(sr)}, SideRef{tq, 2}},        // QS
  };
  std::vector<Edge> edges = t.edges();
  for (Edge& e : edges) {
    if (e.id == edge) continue;
    if (auto it = moved.find(e.first); it != moved.end()) e.first = it->second;
    if (e.second)
      if (auto it = moved.find(*e.second); it != moved.end()) e.second = it->second;
  }
  Edge& nd = edges[edge];
  nd.tail = std::min(r, s);
  nd.head = std::max(r, s);
  nd.first = {tl, 0};
  nd.second = SideRef{tr, 0};

  Triangulation flipped(std::move(corners), std::move(edges), t.signature());

  QuadFrame new_frame = old_frame;
  const int near_r = tail_r ? 0 : 1;
  new_frame.labels[1] = ThetaVertexId::center(tp);
  new_frame.labels[5] = ThetaVertexId::center(tq);
  new_frame.labels[4] = ThetaVertexId::edge_vertex(edge, near_r);
  new_frame.labels[6] = ThetaVertexId::edge_vertex(edge, 1 - near_r);
  return {std::move(flipped), old_frame, new_frame};
}

PositionKey position_key(const Triangulation& t, const ThetaVertexId& v) {
  if (v.is_center()) {
    Corners c = t.corners(v.index);
    std::sort(c.begin(), c.end());
    return {0, c[0], c[1], c[2]};
  }
  const Edge& e = t.edge(v.index);
  return v.slot == 0 ? PositionKey{1, e.tail, e.head, 0} : PositionKey{1, e.head, e.tail, 0};
}

std::vector<std::pair<int, int>> diagonal_set(const Triangulation& t) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : t.edges())
    if (!e.is_boundary()) out.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hiveweb
