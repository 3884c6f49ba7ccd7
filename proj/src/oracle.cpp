#include "kvdp/oracle.hpp"

#include <chrono>

#include "kvdp/error.hpp"
#include "kvdp/shortest.hpp"

namespace kvdp {

namespace {

struct Search {
  const RotationGraph& g;
  const std::vector<Weight>& w;
  const std::vector<std::pair<Vertex, Vertex>>& pairs;
  const OracleLimits& lim;

  std::vector<char> used;
  std::vector<char> terminal_of_other;  // per pair, rebuilt as needed
  std::vector<std::vector<Vertex>> cur;
  Cost best;
  std::vector<std::vector<Vertex>> best_paths;
  long long steps = 0;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void tick() {
    ++steps;
    if (lim.max_steps >= 0 && steps > lim.max_steps)
      fail(Errc::LimitExceeded, "oracle step limit exceeded");
    if ((steps & 1023) == 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (el > lim.time_budget_sec) fail(Errc::Timeout, "oracle time budget exceeded");
    }
  }

  // Shortest s->t through currently unused vertices; s itself may be used
  // (it is the tip of the growing path). nullopt when disconnected.
  Cost residual_dist(Vertex s, Vertex t) {
    SubMask sub = SubMask::all(g.n(), g.m());
    for (Vertex v = 0; v < g.n(); ++v) sub.v[v] = !used[v];
    sub.v[s] = 1;
    if (!sub.v[t]) return std::nullopt;
    auto tr = dijkstra(g, w, s, &sub);
    return tr.dist[t];
  }

  // Admissible bound: weight so far plus residual completions of the open
  // path and of every pair not yet started.
  Cost bound(int i, Vertex tip, Weight acc) {
    Weight b = acc;
    {
      auto d = residual_dist(tip, pairs[i].second);
      if (!d) return std::nullopt;
      b += *d;
    }
    for (int h = i + 1; h < (int)pairs.size(); ++h) {
      auto d = residual_dist(pairs[h].first, pairs[h].second);
      if (!d) return std::nullopt;
      b += *d;
    }
    return b;
  }

  void dfs(int i, Vertex tip, Weight acc) {
    tick();
    auto lb = bound(i, tip, acc);
    if (!lb || (best && !(*lb < *best))) return;

    Vertex t = pairs[i].second;
    const auto& nb = g.rot[tip];
    const auto& eids = g.rot_eid[tip];
    for (size_t j = 0; j < nb.size(); ++j) {
      Vertex v = nb[j];
      if (used[v] || (terminal_of_other[v] && v != t)) continue;
      Weight acc2 = acc + w[eids[j]];
      if (best && !(acc2 < *best)) continue;
      cur[i].push_back(v);
      used[v] = 1;
      if (v == t) {
        if (i + 1 == (int)pairs.size()) {
          if (improve(best, Cost(acc2))) best_paths = cur;
        } else {
          Vertex s2 = pairs[i + 1].first;
          cur[i + 1].assign(1, s2);
          used[s2] = 1;
          dfs(i + 1, s2, acc2);
          used[s2] = 0;
          cur[i + 1].clear();
        }
      } else {
        dfs(i, v, acc2);
      }
      used[v] = 0;
      cur[i].pop_back();
    }
  }
};

}  // namespace

OracleResult oracle_solve(const Instance& inst, const std::vector<Weight>& w,
                          const OracleLimits& lim) {
  const auto& g = inst.g;
  const int k = inst.k();
  require(g.n() <= lim.max_n, Errc::LimitExceeded, "oracle: instance too large");
  require(k <= lim.max_k && k >= 1, Errc::LimitExceeded, "oracle: too many pairs");
  require((int)w.size() == g.m(), Errc::ParseError, "oracle: weight vector size mismatch");

  Search s{g, w, inst.pairs, lim, {}, {}, {}, {}, {}, 0, std::chrono::steady_clock::now()};
  s.used.assign(g.n(), 0);
  s.terminal_of_other.assign(g.n(), 0);
  for (auto [a, b] : inst.pairs) s.terminal_of_other[a] = s.terminal_of_other[b] = 1;
  s.cur.assign(k, {});

  Vertex s0 = inst.pairs[0].first;
  s.cur[0].assign(1, s0);
  s.used[s0] = 1;
  s.dfs(0, s0, Weight{});

  OracleResult r;
  if (s.best) {
    r.feasible = true;
    r.total = *s.best;
    r.paths = s.best_paths;
  }
  return r;
}

}  // namespace kvdp
