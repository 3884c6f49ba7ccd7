#include "kvdp/pair_solver.hpp"

#include <algorithm>
#include <queue>

#include "kvdp/error.hpp"
#include "kvdp/shortest.hpp"

namespace kvdp {

namespace {

// ---- min-cost flow over the vertex-split graph -----------------------------

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    Weight cost;
  };
  std::vector<Arc> arcs;              // arc 2i+1 is the reverse of arc 2i
  std::vector<std::vector<int>> adj;  // arc indices per node

  explicit FlowNet(int nodes) : adj(nodes) {}

  void add(int u, int v, int cap, Weight cost) {
    adj[u].push_back((int)arcs.size());
    arcs.push_back({v, cap, cost});
    adj[v].push_back((int)arcs.size());
    arcs.push_back({u, 0, Weight{} - cost});
  }
};

// One unit along a shortest residual path, Dijkstra with potentials.
// Returns false when the sink is unreachable.
bool augment_unit(FlowNet& net, int S, int T, std::vector<Weight>& pot) {
  const int N = (int)net.adj.size();
  std::vector<Cost> dist(N);
  std::vector<int> via(N, -1);  // arc used to enter the node
  using Item = std::pair<Weight, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[S] = Weight{};
  pq.emplace(Weight{}, S);
  std::vector<char> done(N, 0);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int ai : net.adj[u]) {
      const auto& a = net.arcs[ai];
      if (a.cap <= 0) continue;
      Weight rc = a.cost + pot[u] - pot[a.to];
      require(!(rc < Weight{}), Errc::AuditFailed, "negative reduced cost in flow");
      Weight cand = d + rc;
      if (!dist[a.to] || cand < *dist[a.to]) {
        dist[a.to] = cand;
        via[a.to] = ai;
        pq.emplace(cand, a.to);
      }
    }
  }
  if (!dist[T]) return false;
  for (int v = 0; v < N; ++v)
    if (dist[v]) pot[v] += *dist[v];
  for (int v = T; v != S;) {
    int ai = via[v];
    net.arcs[ai].cap -= 1;
    net.arcs[ai ^ 1].cap += 1;
    v = net.arcs[ai ^ 1].to;
  }
  return true;
}

// Follows flow-carrying arcs from in(s), consuming them, and returns the
// vertex sequence up to whichever sink terminal the unit reaches. A unit
// reaching in(t) always exits straight to the super sink: out(t) has only
// one inflow arc, so it cannot both feed the sink and continue onward.
std::vector<Vertex> trace_unit(FlowNet& net, const std::vector<int>& orig_cap, int start,
                               int stop_a, int stop_b, int N2) {
  std::vector<Vertex> path;
  int x = start;
  while (true) {
    if (x < N2 && (x & 1) == 0) path.push_back(x / 2);  // entering in(v)
    if (x == stop_a || x == stop_b) break;
    int next = -1;
    for (int ai : net.adj[x]) {
      if (ai & 1) continue;  // forward arcs only
      int used = orig_cap[ai] - net.arcs[ai].cap;
      if (used > 0) {
        next = ai;
        break;
      }
    }
    require(next >= 0, Errc::AuditFailed, "flow decomposition stuck");
    net.arcs[next].cap += 1;  // consume one unit
    x = net.arcs[next].to;
  }
  return path;
}

struct FlowOutcome {
  bool feasible = false;
  bool straight = false;  // decomposed as s1->t1, s2->t2
  Weight value{};         // min over both pairings; lower bound for fixed
  std::vector<Vertex> path1, path2;
};

FlowOutcome two_paths_flow(const RotationGraph& g, const std::vector<Weight>& w,
                           const SubMask& sub, Vertex s1, Vertex t1, Vertex s2, Vertex t2) {
  const int n = g.n();
  const int N2 = 2 * n;
  const int S = N2, T = N2 + 1;
  FlowNet net(N2 + 2);
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  for (Vertex v = 0; v < n; ++v)
    if (sub.v[v]) net.add(in(v), out(v), 1, Weight{});
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (!sub.e[e] || !sub.v[u] || !sub.v[v]) continue;
    net.add(out(u), in(v), 1, w[e]);
    net.add(out(v), in(u), 1, w[e]);
  }
  net.add(S, in(s1), 1, Weight{});
  net.add(S, in(s2), 1, Weight{});
  net.add(out(t1), T, 1, Weight{});
  net.add(out(t2), T, 1, Weight{});

  std::vector<int> orig_cap(net.arcs.size());
  for (size_t i = 0; i < net.arcs.size(); ++i) orig_cap[i] = net.arcs[i].cap;

  FlowOutcome r;
  std::vector<Weight> pot(N2 + 2, Weight{});
  if (!augment_unit(net, S, T, pot)) return r;
  if (!augment_unit(net, S, T, pot)) return r;
  r.feasible = true;

  r.path1 = trace_unit(net, orig_cap, in(s1), out(t1), out(t2), N2);
  r.path2 = trace_unit(net, orig_cap, in(s2), out(t1), out(t2), N2);
  r.straight = r.path1.back() == t1;
  r.value = walk_cost(g, w, r.path1) + walk_cost(g, w, r.path2);
  return r;
}

// ---- exact fixed-pairing search --------------------------------------------

struct BnbNode {
  Weight lb{};
  long long id = 0;
  Vertex collide = -1;  // shared vertex to branch on
  std::vector<Vertex> ban1, ban2;
};
struct BnbOrder {
  bool operator()(const BnbNode& a, const BnbNode& b) const {
    return a.lb != b.lb ? b.lb < a.lb : b.id < a.id;  // min-heap on (lb, id)
  }
};

// Best-first branch and bound. A node is a pair of ban lists; its bound is
// the sum of the two independently shortest paths under those bans, which
// never overstates the truth. Branching removes the smallest shared vertex
// from one side or the other; every feasible solution survives in one child.
std::optional<PairResult> fixed_pairing_bnb(const RotationGraph& g, const std::vector<Weight>& w,
                                            const SubMask& sub, Vertex s1, Vertex t1, Vertex s2,
                                            Vertex t2, const PairLimits& lim) {
  auto solve_one = [&](Vertex s, Vertex t, const std::vector<Vertex>& ban)
      -> std::optional<std::pair<std::vector<Vertex>, Weight>> {
    SubMask m = sub;
    for (Vertex v : ban) m.v[v] = 0;
    if (!m.v[s] || !m.v[t]) return std::nullopt;
    if (s == t) return std::make_pair(std::vector<Vertex>{s}, Weight{});
    return shortest_path(g, w, s, t, &m);
  };

  std::optional<PairResult> best;
  long long created = 0, counter = 0;
  std::priority_queue<BnbNode, std::vector<BnbNode>, BnbOrder> open;

  auto consider = [&](std::vector<Vertex> ban1, std::vector<Vertex> ban2) {
    if (++created > lim.max_nodes)
      fail(Errc::LimitExceeded, "pair solver branch and bound budget exhausted");
    auto p1 = solve_one(s1, t1, ban1);
    if (!p1) return;
    auto p2 = solve_one(s2, t2, ban2);
    if (!p2) return;
    Weight lb = p1->second + p2->second;
    if (best && !(lb < best->total)) return;
    std::vector<char> on1(g.n(), 0);
    for (Vertex v : p1->first) on1[v] = 1;
    Vertex c = -1;
    for (Vertex v : p2->first)
      if (on1[v] && (c < 0 || v < c)) c = v;
    if (c < 0) {
      best = PairResult{lb, std::move(p1->first), std::move(p2->first)};
    } else {
      open.push(BnbNode{lb, counter++, c, std::move(ban1), std::move(ban2)});
    }
  };

  consider({}, {});
  while (!open.empty()) {
    BnbNode nd = open.top();
    open.pop();
    if (best && !(nd.lb < best->total)) break;
    Vertex c = nd.collide;
    if (c != s1 && c != t1) {
      auto b1 = nd.ban1;
      b1.push_back(c);
      consider(std::move(b1), nd.ban2);
    }
    if (c != s2 && c != t2) {
      auto b2 = nd.ban2;
      b2.push_back(c);
      consider(std::move(nd.ban1), std::move(b2));
    }
  }
  return best;
}

}  // namespace

std::optional<PairResult> min_sum_pair(const RotationGraph& g, const std::vector<Weight>& w,
                                       const SubMask& sub, Vertex s1, Vertex t1, Vertex s2,
                                       Vertex t2, const PairLimits& lim) {
  for (Vertex a : {s1, t1})
    for (Vertex b : {s2, t2})
      if (a == b) return std::nullopt;
  for (Vertex v : {s1, t1, s2, t2})
    if (!sub.v[v]) return std::nullopt;

  // Trivial one-vertex paths: route the other pair around the parked vertex.
  if (s1 == t1 || s2 == t2) {
    PairResult r;
    if (s1 == t1 && s2 == t2) {
      r.path1 = {s1};
      r.path2 = {s2};
      return r;
    }
    Vertex parked = s1 == t1 ? s1 : s2;
    Vertex os = s1 == t1 ? s2 : s1, ot = s1 == t1 ? t2 : t1;
    SubMask m = sub;
    m.v[parked] = 0;
    auto p = shortest_path(g, w, os, ot, &m);
    if (!p) return std::nullopt;
    r.total = p->second;
    if (s1 == t1) {
      r.path1 = {parked};
      r.path2 = std::move(p->first);
    } else {
      r.path1 = std::move(p->first);
      r.path2 = {parked};
    }
    return r;
  }

  // The flow relaxes the pairing, so an infeasible flow rules out the fixed
  // pairing too, and a straight decomposition is already optimal for it.
  auto flow = two_paths_flow(g, w, sub, s1, t1, s2, t2);
  if (!flow.feasible) return std::nullopt;
  if (flow.straight)
    return PairResult{flow.value, std::move(flow.path1), std::move(flow.path2)};
  return fixed_pairing_bnb(g, w, sub, s1, t1, s2, t2, lim);
}

}  // namespace kvdp
