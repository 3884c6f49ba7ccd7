#include "kvdp/regions.hpp"

#include <algorithm>

#include "kvdp/error.hpp"
#include "kvdp/shortest.hpp"

namespace kvdp {

namespace {

Region build_region(const RotationGraph& g, const std::vector<Weight>& w, Vertex s, Vertex t) {
  Region r;
  auto tree = dijkstra(g, w, s);
  require(!tree.collision, Errc::PerturbationCollision, "tie survived the perturbation");
  auto p = extract_path(tree, t);
  require(p.has_value(), Errc::DisconnectedGraph, "terminal pair not connected");
  r.path = std::move(*p);
  r.path_cost = *tree.dist[t];
  r.arc = boundary_arc(g, s, t);

  std::vector<Vertex> walk = r.path;  // close it with the reversed arc
  for (size_t i = r.arc.size() - 1; i-- > 0;) walk.push_back(r.arc[i]);
  r.sub = enclosed_subgraph(g, walk).sub;

  r.pos_on_path.assign(g.n(), -1);
  for (int i = 0; i < (int)r.path.size(); ++i) r.pos_on_path[r.path[i]] = i;
  return r;
}

}  // namespace

RegionSet build_regions(const Instance& inst, std::uint64_t seed) {
  const auto& g = inst.g;
  const int k = inst.k();
  RegionSet rs;
  rs.w = perturb(g, seed);
  rs.regions.reserve(k);
  for (auto [s, t] : inst.pairs) rs.regions.push_back(build_region(g, rs.w, s, t));

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Region& ri = rs.regions[i];
      const Region& rj = rs.regions[j];
      std::vector<Vertex> shared;
      for (Vertex v = 0; v < g.n(); ++v)
        if (ri.sub.v[v] && rj.sub.v[v]) shared.push_back(v);
      if (shared.empty()) continue;

      for (Vertex v : shared)
        require(ri.pos_on_path[v] >= 0 && rj.pos_on_path[v] >= 0, Errc::BorderNotPath,
                "regions overlap off their paths");
      std::sort(shared.begin(), shared.end(),
                [&](Vertex a, Vertex b) { return ri.pos_on_path[a] < ri.pos_on_path[b]; });
      for (size_t q = 1; q < shared.size(); ++q) {
        bool step_i = ri.pos_on_path[shared[q]] == ri.pos_on_path[shared[q - 1]] + 1;
        bool step_j = rj.pos_on_path[shared[q]] == rj.pos_on_path[shared[q - 1]] - 1;
        require(step_i && step_j, Errc::BorderNotPath,
                "border is not one opposite-direction stretch");
      }
      Border b;
      b.i = i;
      b.j = j;
      b.run = std::move(shared);
      b.i_lo = ri.pos_on_path[b.run.front()];
      b.i_hi = ri.pos_on_path[b.run.back()];
      b.j_lo = rj.pos_on_path[b.run.back()];
      b.j_hi = rj.pos_on_path[b.run.front()];
      rs.borders.push_back(std::move(b));
    }
  }

  size_t cap = k <= 2 ? 1 : (size_t)(3 * k - 6);
  require(rs.borders.size() <= cap, Errc::AuditFailed, "too many borders for a planar layout");
  return rs;
}

std::vector<std::vector<int>> region_components(int k, const std::vector<Border>& borders) {
  std::vector<int> comp(k, -1);
  std::vector<std::vector<int>> adj(k);
  for (const auto& b : borders) {
    adj[b.i].push_back(b.j);
    adj[b.j].push_back(b.i);
  }
  std::vector<std::vector<int>> out;
  for (int r = 0; r < k; ++r) {
    if (comp[r] >= 0) continue;
    std::vector<int> stack = {r}, members;
    comp[r] = (int)out.size();
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v : adj[u])
        if (comp[v] < 0) {
          comp[v] = comp[u];
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace kvdp
