#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kvdp/instance.hpp"
#include "kvdp/pair_solver.hpp"

namespace kvdp {

struct SolveOptions {
  std::uint64_t seed = 1;  // perturbation seed; retries bump it by one
  int max_attempts = 4;
  bool allow_fallback = true;  // reference solver rescue for small instances
  PairLimits pair_limits;
  long long max_exact_evals = 200000;  // per component, guards the A* loops
};

struct SolveStats {
  int attempts = 0;
  std::uint64_t seed_used = 0;  // seed of the successful attempt
  bool used_fallback = false;
  std::vector<std::string> notes;  // one line per retried failure
};

struct Solution {
  bool feasible = false;
  long long total = 0;  // sum of base edge lengths
  std::vector<std::vector<Vertex>> paths;  // per pair, s_i..t_i
};

// Minimum total length of k pairwise vertex-disjoint paths joining the
// terminal pairs, which must sit in ccw order s1,t1,...,sk,tk on the outer
// face. Throws on malformed input; degenerate internals are retried with a
// fresh perturbation and, for small instances, handed to the reference
// solver rather than guessed at.
Solution solve(const Instance& inst, const SolveOptions& opt = {}, SolveStats* stats = nullptr);

// Checks a claimed solution against an instance: path endpoints, edge
// existence, simplicity, pairwise disjointness, and the total. Returns an
// empty string when fine, else a description of the first problem.
std::string check_solution(const Instance& inst, const Solution& sol);

}  // namespace kvdp
