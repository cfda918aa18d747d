#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hiveweb/third.hpp"

namespace hiveweb {

/// A finite directed multigraph under the intersection metric: crossing an
/// arc forward costs 1/3, backward 2/3.
class OrientedGraph {
 public:
  using Vertex = int;

  /// Returns the existing index when the name is already present.
  Vertex add_vertex(const std::string& name);
  void add_arc(Vertex tail, Vertex head);
  void add_arc(const std::string& tail, const std::string& head);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  std::optional<Vertex> find(const std::string& name) const;
  /// Throws UnknownVertex.
  Vertex vertex(const std::string& name) const;

  /// The same vertices with every arc reversed.
  OrientedGraph reversed() const;

  /// Outgoing traversal steps as (neighbor, cost in thirds).
  const std::vector<std::pair<Vertex, int>>& steps(Vertex v) const { return steps_.at(v); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::pair<Vertex, Vertex>> arcs_;
  std::vector<std::vector<std::pair<Vertex, int>>> steps_;
};

/// Distances in thirds from the source to every vertex; nullopt when
/// unreachable.
std::vector<std::optional<std::int64_t>> distances_from(const OrientedGraph& g, OrientedGraph::Vertex source);

/// Throws Unreachable.
Third shortest_distance(const OrientedGraph& g, OrientedGraph::Vertex from, OrientedGraph::Vertex to);

/// Closed-form distance in the lattice graph from the origin to p.
Third gamma_distance(LatticePoint p);

/// Rectangle [x_min, x_max] x [y_min, y_max] of the lattice graph, whose
/// vertex (x, y) has arcs to (x+1, y), (x, y+1) and (x-1, y-1).
struct GammaWindow {
  std::int64_t x_min, x_max, y_min, y_max;
  OrientedGraph graph;

  bool contains(LatticePoint p) const { return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max; }
  OrientedGraph::Vertex vertex(LatticePoint p) const;
  LatticePoint point(OrientedGraph::Vertex v) const;
};

GammaWindow gamma_window(std::int64_t x_min, std::int64_t x_max, std::int64_t y_min, std::int64_t y_max);

/// Square window [-radius, radius]^2.
GammaWindow gamma_window(std::int64_t radius);

/// Tripod corners: a lower left, b lower right, c upper.
struct FermatSpec {
  LatticePoint a, b, c;
};

bool omega_contains(const FermatSpec& f, LatticePoint p);
bool omega_nonempty(const FermatSpec& f);

/// Minimum of d(A,X)+d(B,X)+d(C,X) over the lattice; throws OmegaEmpty.
Third fermat_closed_form(const FermatSpec& f);

struct FermatResult {
  Third value;
  std::vector<OrientedGraph::Vertex> argmin;  // ascending
};

/// Exhaustive minimum of d(a,X)+d(b,X)+d(c,X) over all vertices X.
FermatResult fermat_brute(const OrientedGraph& g, OrientedGraph::Vertex a, OrientedGraph::Vertex b,
                          OrientedGraph::Vertex c);

}  // namespace hiveweb
