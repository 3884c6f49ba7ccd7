#pragma once

#include <optional>
#include <vector>

#include "kvdp/instance.hpp"
#include "kvdp/weights.hpp"

namespace kvdp {

// Exhaustive reference solver for small instances. Searches simple paths
// pair by pair via DFS in rotation order, pruning with residual shortest
// path bounds. Deliberately brute force: used to cross-check the solver.

struct OracleLimits {
  int max_n = 25;
  int max_k = 3;
  double time_budget_sec = 120.0;
  long long max_steps = -1;  // -1 = unlimited
};

struct OracleResult {
  bool feasible = false;
  Weight total{};
  std::vector<std::vector<Vertex>> paths;  // one simple path per pair
};

OracleResult oracle_solve(const Instance& inst, const std::vector<Weight>& w,
                          const OracleLimits& lim = {});

}  // namespace kvdp
