#include "kvdp/shortest.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <unordered_set>

#include "kvdp/error.hpp"

namespace kvdp {

std::vector<Weight> perturb(const RotationGraph& g, std::uint64_t seed) {
  const int m = g.m();
  std::vector<Weight> w(m);
  if (m == 0) return w;
  int bits = 16;
  for (int b = 0; (1 << b) < m; ++b) bits = 2 * (b + 1) + 16;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(1, (std::int64_t(1) << bits) - 1);
  std::unordered_set<std::int64_t> used;
  for (int e = 0; e < m; ++e) {
    std::int64_t t;
    do {
      t = pick(rng);
    } while (!used.insert(t).second);
    w[e] = Weight{g.length[e], t};
  }
  return w;
}

std::vector<Weight> base_weights(const RotationGraph& g) {
  std::vector<Weight> w(g.m());
  for (int e = 0; e < g.m(); ++e) w[e] = Weight{g.length[e], 0};
  return w;
}

DijkstraTree dijkstra(const RotationGraph& g, const std::vector<Weight>& w, Vertex src,
                      const SubMask* sub, const std::vector<char>* banned_internal) {
  const int n = g.n();
  require(src >= 0 && src < n, Errc::UnknownVertex, "dijkstra source out of range");
  require(!sub || sub->v[src], Errc::UnknownVertex, "dijkstra source outside subgraph");

  DijkstraTree t;
  t.src = src;
  t.dist.assign(n, std::nullopt);
  t.parent.assign(n, -1);
  std::vector<char> done(n, 0);

  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  t.dist[src] = Weight{};
  pq.emplace(Weight{}, src);

  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (banned_internal && (*banned_internal)[u] && u != src) continue;
    const auto& nb = g.rot[u];
    const auto& eids = g.rot_eid[u];
    for (size_t i = 0; i < nb.size(); ++i) {
      Vertex v = nb[i];
      int e = eids[i];
      if (sub && (!sub->e[e] || !sub->v[v])) continue;
      Weight cand = d + w[e];
      if (!t.dist[v] || cand < *t.dist[v]) {
        t.dist[v] = cand;
        t.parent[v] = u;
        pq.emplace(cand, v);
      } else if (cand == *t.dist[v] && t.parent[v] != u) {
        t.collision = true;
      }
    }
  }
  return t;
}

std::optional<std::vector<Vertex>> extract_path(const DijkstraTree& t, Vertex dst) {
  if (!t.dist[dst]) return std::nullopt;
  std::vector<Vertex> p;
  for (Vertex v = dst; v != -1; v = t.parent[v]) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

std::optional<std::pair<std::vector<Vertex>, Weight>> shortest_path(
    const RotationGraph& g, const std::vector<Weight>& w, Vertex src, Vertex dst,
    const SubMask* sub, const std::vector<char>* banned_internal) {
  auto t = dijkstra(g, w, src, sub, banned_internal);
  if (!t.dist[dst]) return std::nullopt;
  return std::make_pair(*extract_path(t, dst), *t.dist[dst]);
}

}  // namespace kvdp
