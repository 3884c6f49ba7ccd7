#pragma once

#include <optional>
#include <vector>

#include "kvdp/rotation_graph.hpp"
#include "kvdp/weights.hpp"

namespace kvdp {

// Minimum total weight of two vertex-disjoint simple paths s1->t1 and
// s2->t2 inside a masked subgraph, with the pairing fixed. An endpoint may
// equal its own partner (a trivial one-vertex path) but the two paths must
// not share any vertex, endpoints included.
//
// A min-cost flow of value two over the vertex-split graph gives a fast
// optimistic answer, but it optimizes over both pairings; when its
// decomposition comes back crossed (s1 routed to t2), an exact best-first
// branch and bound on collision vertices takes over. The flow value stays
// valid as a lower bound throughout.

struct PairResult {
  Weight total{};
  std::vector<Vertex> path1, path2;
};

struct PairLimits {
  long long max_nodes = 100000;  // branch and bound node budget per call
};

std::optional<PairResult> min_sum_pair(const RotationGraph& g, const std::vector<Weight>& w,
                                       const SubMask& sub, Vertex s1, Vertex t1, Vertex s2,
                                       Vertex t2, const PairLimits& lim = {});

}  // namespace kvdp
