#include "kvdp/rotation_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace kvdp {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case Errc::MalformedRotation: return "MalformedRotation";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotClosedWalk: return "NotClosedWalk";
    case Errc::TerminalsNotDistinct: return "TerminalsNotDistinct";
    case Errc::TerminalNotOnBoundary: return "TerminalNotOnBoundary";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::PerturbationCollision: return "PerturbationCollision";
    case Errc::BorderNotPath: return "BorderNotPath";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::OverlappingSharedLevels: return "OverlappingSharedLevels";
    case Errc::ReconstructionMismatch: return "ReconstructionMismatch";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::Timeout: return "Timeout";
    case Errc::SpecTooSmall: return "SpecTooSmall";
    case Errc::EndpointNotOnPath: return "EndpointNotOnPath";
    case Errc::ParseError: return "ParseError";
    case Errc::AuditFailed: return "AuditFailed";
  }
  return "UnknownError";
}

int RotationGraph::edge_between(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return -1;
  if (rot[u].size() > rot[v].size()) std::swap(u, v);
  for (size_t i = 0; i < rot[u].size(); ++i)
    if (rot[u][i] == v) return rot_eid[u][i];
  return -1;
}

bool RotationGraph::adjacent_in(const SubMask& sub, Vertex u, Vertex v) const {
  int e = edge_between(u, v);
  return e >= 0 && sub.e[e] && sub.v[u] && sub.v[v];
}

RotationGraph build_embedding(
    int n, std::vector<std::vector<Vertex>> rotations,
    const std::vector<std::pair<std::pair<Vertex, Vertex>, std::int64_t>>& weighted_edges) {
  require(n >= 1, Errc::MalformedRotation, "graph needs at least one vertex");
  require((int)rotations.size() == n, Errc::MalformedRotation, "rotation list count != n");

  RotationGraph g;
  g.rot = std::move(rotations);
  g.rot_eid.assign(n, {});

  std::map<std::pair<Vertex, Vertex>, int> eid;
  for (auto& [uv, w] : weighted_edges) {
    auto [u, v] = uv;
    require(u >= 0 && u < n && v >= 0 && v < n, Errc::UnknownVertex, "edge endpoint out of range");
    require(u != v, Errc::MalformedRotation, "self-loops are not allowed");
    require(w >= 0, Errc::MalformedRotation, "negative edge length");
    auto key = std::minmax(u, v);
    require(!eid.count(key), Errc::MalformedRotation, "parallel edge");
    eid[key] = g.m();
    g.edges.push_back(key);
    g.length.push_back(w);
  }

  // rotations must list exactly the incident edges, each once
  int rot_entries = 0;
  for (Vertex u = 0; u < n; ++u) {
    std::set<Vertex> seen;
    for (Vertex v : g.rot[u]) {
      require(v >= 0 && v < n, Errc::UnknownVertex, "rotation entry out of range");
      require(v != u, Errc::MalformedRotation, "self-loop in rotation");
      require(seen.insert(v).second, Errc::MalformedRotation, "duplicate neighbor in rotation");
      auto it = eid.find(std::minmax(u, v));
      require(it != eid.end(), Errc::MalformedRotation, "rotation entry without a matching edge");
      g.rot_eid[u].push_back(it->second);
      ++rot_entries;
    }
  }
  require(rot_entries == 2 * g.m(), Errc::MalformedRotation, "edge missing from a rotation list");

  // connectivity
  {
    std::vector<char> vis(n, 0);
    std::queue<Vertex> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.rot[u])
        if (!vis[v]) {
          vis[v] = 1;
          ++cnt;
          q.push(v);
        }
    }
    require(cnt == n, Errc::DisconnectedGraph, "graph is not connected");
  }

  // position of each half-edge's tail inside the rotation at its head,
  // then the face successor: next(u,v) = (v, ccw successor of u at v)
  std::vector<std::vector<int>> pos_in_rot(n);
  for (Vertex u = 0; u < n; ++u) pos_in_rot[u].resize(g.rot[u].size());
  std::vector<std::pair<int, int>> he_pos(2 * g.m());  // (head, index of tail in rot[head])
  for (Vertex u = 0; u < n; ++u)
    for (size_t i = 0; i < g.rot[u].size(); ++i) {
      Vertex v = g.rot[u][i];
      int h = g.he_of(v, u, g.rot_eid[u][i]);  // half-edge v -> u
      he_pos[h] = {(int)u, (int)i};
    }
  g.he_next.assign(2 * g.m(), -1);
  for (int h = 0; h < 2 * g.m(); ++h) {
    auto [head, idx] = he_pos[h];
    int succ = (idx + 1) % (int)g.rot[head].size();
    Vertex w = g.rot[head][succ];
    g.he_next[h] = g.he_of(head, w, g.rot_eid[head][succ]);
  }

  g.he_face.assign(2 * g.m(), -1);
  for (int h = 0; h < 2 * g.m(); ++h) {
    if (g.he_face[h] >= 0) continue;
    int f = g.face_count++;
    for (int cur = h; g.he_face[cur] < 0; cur = g.he_next[cur]) g.he_face[cur] = f;
  }
  if (g.m() == 0) g.face_count = 1;

  require(n - g.m() + g.face_count == 2, Errc::NonPlanarEmbedding,
          "Euler check failed: V-E+F = " + std::to_string(n - g.m() + g.face_count));

  // outer face: the one left of the half-edge from vertex 0 to its last
  // listed neighbor. Its orbit walks the boundary clockwise; reverse it.
  if (g.m() > 0) {
    require(!g.rot[0].empty(), Errc::DisconnectedGraph, "vertex 0 is isolated");
    int h0 = g.he_of(0, g.rot[0].back(), g.rot_eid[0].back());
    g.outer_face = g.he_face[h0];
    std::vector<Vertex> cw;
    int cur = h0;
    do {
      cw.push_back(g.he_tail(cur));
      cur = g.he_next[cur];
    } while (cur != h0);
    g.boundary.assign(cw.begin(), cw.end());
    std::reverse(g.boundary.begin() + 1, g.boundary.end());
  } else {
    g.outer_face = 0;
    g.boundary = {0};
  }
  return g;
}

SubMask induced_mask(const RotationGraph& g, const std::vector<Vertex>& verts) {
  SubMask s = SubMask::none(g.n(), g.m());
  for (Vertex v : verts) {
    require(v >= 0 && v < g.n(), Errc::UnknownVertex, "induced vertex out of range");
    s.v[v] = 1;
  }
  for (int e = 0; e < g.m(); ++e)
    if (s.v[g.edges[e].first] && s.v[g.edges[e].second]) s.e[e] = 1;
  return s;
}

Enclosed enclosed_subgraph(const RotationGraph& g, const std::vector<Vertex>& walk) {
  require(walk.size() >= 1, Errc::NotClosedWalk, "empty walk");
  require(walk.front() == walk.back() || walk.size() == 1, Errc::NotClosedWalk,
          "walk does not return to its start");

  std::vector<int> mult(g.m(), 0);
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    int e = g.edge_between(walk[i], walk[i + 1]);
    require(e >= 0, Errc::NotClosedWalk, "walk uses a missing edge");
    mult[e] ^= 1;
  }
  // odd part must be a union of cycles
  std::vector<int> odd_deg(g.n(), 0);
  for (int e = 0; e < g.m(); ++e)
    if (mult[e]) {
      odd_deg[g.edges[e].first] ^= 1;
      odd_deg[g.edges[e].second] ^= 1;
    }
  for (Vertex v = 0; v < g.n(); ++v)
    require(!odd_deg[v], Errc::NotClosedWalk, "odd part of the walk is not a cycle union");

  // face parity by BFS from the outer face, flipping across odd edges
  std::vector<int> parity(g.face_count, -1);
  parity[g.outer_face] = 0;
  std::queue<int> q;
  q.push(g.outer_face);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int h = 0; h < 2 * g.m(); ++h) {
      if (g.he_face[h] != f) continue;
      int f2 = g.he_face[h ^ 1];
      int p2 = parity[f] ^ (mult[h >> 1] ? 1 : 0);
      if (parity[f2] < 0) {
        parity[f2] = p2;
        q.push(f2);
      } else {
        require(parity[f2] == p2, Errc::NotClosedWalk, "inconsistent crossing parity");
      }
    }
  }

  Enclosed out;
  out.sub = SubMask::none(g.n(), g.m());
  out.face_in.assign(g.face_count, 0);
  for (int f = 0; f < g.face_count; ++f) out.face_in[f] = parity[f] == 1;
  for (Vertex v : walk) out.sub.v[v] = 1;
  for (size_t i = 0; i + 1 < walk.size(); ++i)
    out.sub.e[g.edge_between(walk[i], walk[i + 1])] = 1;
  for (int h = 0; h < 2 * g.m(); ++h) {
    if (!out.face_in[g.he_face[h]]) continue;
    out.sub.v[g.he_tail(h)] = 1;
    out.sub.e[h >> 1] = 1;
  }
  return out;
}

bool is_simple_path(const std::vector<Vertex>& p) {
  std::set<Vertex> s(p.begin(), p.end());
  return s.size() == p.size();
}

}  // namespace kvdp
