#include "kvdp/generator.hpp"

#include <random>

#include "kvdp/error.hpp"

namespace kvdp {

Instance generate(const GenSpec& spec) {
  require(spec.rows >= 2 && spec.cols >= 2, Errc::SpecTooSmall, "grid needs at least 2x2");
  require(spec.k >= 1, Errc::SpecTooSmall, "need at least one pair");
  require(spec.lo >= 0 && spec.lo <= spec.hi, Errc::SpecTooSmall, "bad weight range");
  const int R = spec.rows, C = spec.cols;
  auto id = [&](int r, int c) { return r * C + c; };

  // Neighbor order below (next row, left, previous row, right) makes the
  // outer walk start 0, then down the first column; see the embedding tests.
  int n = R * C;
  std::vector<std::vector<Vertex>> rot(n);
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::int64_t>> edges;
  std::vector<char> vertical;  // per edge, for the adversarial scheme
  std::vector<char> outer_col;
  auto add_edge = [&](int u, int v, bool vert, bool outer) {
    edges.push_back({{u, v}, 1});
    vertical.push_back(vert);
    outer_col.push_back(outer);
  };
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c) {
      if (r + 1 < R) rot[id(r, c)].push_back(id(r + 1, c));
      if (c > 0) rot[id(r, c)].push_back(id(r, c - 1));
      if (r > 0) rot[id(r, c)].push_back(id(r - 1, c));
      if (c + 1 < C) rot[id(r, c)].push_back(id(r, c + 1));
      if (r + 1 < R) add_edge(id(r, c), id(r + 1, c), true, c == 0 || c == C - 1);
      if (c + 1 < C) add_edge(id(r, c), id(r, c + 1), false, false);
    }

  if (spec.family == GenSpec::Family::SubdividedGrid) {
    // split every horizontal edge with a fresh degree-2 vertex
    size_t base = edges.size();
    for (size_t e = 0; e < base; ++e) {
      if (vertical[e]) continue;
      auto [u, v] = edges[e].first;
      int w = n++;
      rot.push_back({u, v});
      for (auto& x : rot[u])
        if (x == v) x = w;
      for (auto& x : rot[v])
        if (x == u) x = w;
      edges[e].first = {u, w};
      add_edge(w, v, false, false);
    }
  }

  std::mt19937_64 rng(spec.seed);
  for (size_t e = 0; e < edges.size(); ++e) {
    switch (spec.weights) {
      case GenSpec::Weights::Unit:
        break;
      case GenSpec::Weights::Uniform:
        edges[e].second =
            (std::int64_t)(rng() % (std::uint64_t)(spec.hi - spec.lo + 1)) + spec.lo;
        break;
      case GenSpec::Weights::AdversarialColumns:
        edges[e].second = vertical[e] && outer_col[e] ? 100 : 1;
        break;
    }
  }

  Instance inst;
  inst.g = build_embedding(n, std::move(rot), edges);
  const auto& b = inst.g.boundary;
  int L = (int)b.size();
  require(L >= 2 * spec.k, Errc::SpecTooSmall, "perimeter too short for the pairs");
  for (int q = 0; q < spec.k; ++q) {
    Vertex s = b[(std::int64_t)(2 * q) * L / (2 * spec.k)];
    Vertex t = b[(std::int64_t)(2 * q + 1) * L / (2 * spec.k)];
    inst.pairs.push_back({s, t});
  }
  validate_instance(inst);
  return inst;
}

}  // namespace kvdp
