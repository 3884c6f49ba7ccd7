#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kvdp/error.hpp"

namespace kvdp {

using Vertex = int;

// Vertex/edge membership flags over a host graph. Used instead of
// materialized subgraphs everywhere inside the solver.
struct SubMask {
  std::vector<char> v;
  std::vector<char> e;

  static SubMask all(int n, int m) { return {std::vector<char>(n, 1), std::vector<char>(m, 1)}; }
  static SubMask none(int n, int m) { return {std::vector<char>(n, 0), std::vector<char>(m, 0)}; }
};

// Undirected simple planar graph given by a rotation system: for every
// vertex, its neighbors in counter-clockwise order. Faces are the orbits of
// the half-edge successor rule next(u,v) = (v, w) where w follows u in the
// rotation at v; each face lies to the left of its half-edges, so bounded
// faces come out counter-clockwise and the outer face clockwise.
//
// Convention fixed by the instance format: vertex 0 lies on the outer face
// and its rotation list starts right after the outer-face gap, i.e. the
// half-edge from 0 to its last listed neighbor borders the outer face.
struct RotationGraph {
  std::vector<std::vector<Vertex>> rot;   // ccw neighbor lists
  std::vector<std::vector<int>> rot_eid;  // edge id parallel to rot
  std::vector<std::pair<Vertex, Vertex>> edges;  // endpoints, u < v
  std::vector<std::int64_t> length;              // base lengths, >= 0

  // face structure, filled by build_embedding
  std::vector<int> he_next;  // successor half-edge on the same face
  std::vector<int> he_face;
  int face_count = 0;
  int outer_face = -1;
  std::vector<Vertex> boundary;  // outer face walk, ccw, starting at vertex 0

  int n() const { return (int)rot.size(); }
  int m() const { return (int)edges.size(); }

  // half-edge h: edge h/2 directed u->v if h even (u < v), v->u if odd
  Vertex he_tail(int h) const { return (h & 1) ? edges[h >> 1].second : edges[h >> 1].first; }
  Vertex he_head(int h) const { return (h & 1) ? edges[h >> 1].first : edges[h >> 1].second; }
  int he_of(Vertex u, Vertex v, int eid) const {
    (void)u;
    return 2 * eid + (edges[eid].first == v ? 1 : 0);
  }

  int edge_between(Vertex u, Vertex v) const;
  bool adjacent_in(const SubMask& sub, Vertex u, Vertex v) const;
};

// Validates and finalizes a rotation-system graph: simple, connected,
// rotations consistent with the edge list, Euler's formula V - E + F = 2.
RotationGraph build_embedding(int n, std::vector<std::vector<Vertex>> rotations,
                              const std::vector<std::pair<std::pair<Vertex, Vertex>, std::int64_t>>& weighted_edges);

// Vertices of U plus all edges with both endpoints in U.
SubMask induced_mask(const RotationGraph& g, const std::vector<Vertex>& verts);

struct Enclosed {
  SubMask sub;                 // walk material plus everything strictly inside
  std::vector<char> face_in;   // faces strictly inside the walk
};

// Material on a closed walk together with all vertices/edges of faces that
// the walk winds around an odd number of times. Faces are classified by
// crossing parity from the outer face.
Enclosed enclosed_subgraph(const RotationGraph& g, const std::vector<Vertex>& closed_walk);

// Walk length under the given per-edge costs.
template <class W>
W walk_cost(const RotationGraph& g, const std::vector<W>& w, const std::vector<Vertex>& walk) {
  W total{};
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    int e = g.edge_between(walk[i], walk[i + 1]);
    require(e >= 0, Errc::UnknownVertex, "walk uses a missing edge");
    total += w[e];
  }
  return total;
}

bool is_simple_path(const std::vector<Vertex>& p);

}  // namespace kvdp
