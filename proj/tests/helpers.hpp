#pragma once

#include <vector>

#include "kvdp/generator.hpp"
#include "kvdp/instance.hpp"
#include "kvdp/shortest.hpp"

namespace kvdp::testing {

inline Instance g33() {
  GenSpec s;
  s.rows = s.cols = 3;
  s.k = 2;
  return generate(s);
}

inline Instance g33w() {
  GenSpec s;
  s.rows = s.cols = 3;
  s.k = 2;
  s.weights = GenSpec::Weights::AdversarialColumns;
  return generate(s);
}

// A star: every tip-to-tip route runs through the cut vertex 0, so the two
// pairs can never be routed disjointly.
inline Instance plus_graph() {
  Instance inst;
  std::vector<std::vector<Vertex>> rot = {{4, 3, 2, 1}, {0}, {0}, {0}, {0}};
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::int64_t>> edges = {
      {{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}, {{0, 4}, 1}};
  inst.g = build_embedding(5, std::move(rot), edges);
  inst.pairs = {{1, 2}, {3, 4}};
  return inst;
}

// 3x5 grid whose cheap edges form a tree, so each pair's shortest path is
// forced through shared corridors: paths 1 and 2 both want [7,12], paths 2
// and 3 both want [8,9]. All three regions end up in one chained component.
inline Instance funnel_3x5() {
  GenSpec s;
  s.rows = 3;
  s.cols = 5;
  s.k = 1;
  Instance inst = generate(s);
  for (auto& len : inst.g.length) len = 100;
  const std::pair<Vertex, Vertex> cheap[] = {{0, 1}, {1, 6}, {6, 7}, {7, 12}, {11, 12},
                                             {7, 8}, {8, 9}, {4, 9}, {3, 8}, {2, 3}};
  for (auto [u, v] : cheap) inst.g.length[inst.g.edge_between(u, v)] = 1;
  inst.pairs = {{0, 11}, {12, 9}, {4, 2}};
  validate_instance(inst);
  return inst;
}

// Exact two-path reference: enumerate every simple s1..t1 path, then finish
// with a shortest s2..t2 path in what remains. Exponential, tiny inputs only.
struct BrutePair {
  bool feasible = false;
  Weight total{};
};

inline void brute_pair_rec(const RotationGraph& g, const std::vector<Weight>& w,
                           std::vector<char>& used, Vertex at, Vertex t1, Weight acc, Vertex s2,
                           Vertex t2, BrutePair& best) {
  if (at == t1) {
    if (used[s2] || used[t2]) return;
    SubMask m = SubMask::all(g.n(), g.m());
    for (Vertex v = 0; v < g.n(); ++v)
      if (used[v]) m.v[v] = 0;
    auto rest = shortest_path(g, w, s2, t2, &m);
    if (!rest) return;
    Weight tot = acc + rest->second;
    if (!best.feasible || tot < best.total) {
      best.feasible = true;
      best.total = tot;
    }
    return;
  }
  for (size_t i = 0; i < g.rot[at].size(); ++i) {
    Vertex nx = g.rot[at][i];
    if (used[nx]) continue;
    used[nx] = 1;
    brute_pair_rec(g, w, used, nx, t1, acc + w[g.rot_eid[at][i]], s2, t2, best);
    used[nx] = 0;
  }
}

inline BrutePair brute_pair(const RotationGraph& g, const std::vector<Weight>& w, Vertex s1,
                            Vertex t1, Vertex s2, Vertex t2) {
  BrutePair best;
  if (s1 == s2 || s1 == t2 || t1 == s2 || t1 == t2) return best;
  std::vector<char> used(g.n(), 0);
  used[s1] = 1;
  brute_pair_rec(g, w, used, s1, t1, Weight{}, s2, t2, best);
  return best;
}

}  // namespace kvdp::testing
