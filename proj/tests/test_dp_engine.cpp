#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "kvdp/dp_engine.hpp"
#include "kvdp/oracle.hpp"
#include "kvdp/regions.hpp"
#include "kvdp/solution.hpp"

using namespace kvdp;
using namespace kvdp::testing;

TEST_CASE("unit grid: two short disjoint paths") {
  SolveStats st;
  auto inst = g33();
  auto sol = solve(inst, {}, &st);
  REQUIRE(sol.feasible);
  CHECK(sol.total == 4);
  CHECK(sol.paths[0] == std::vector<Vertex>{0, 3, 6});
  CHECK(sol.paths[1] == std::vector<Vertex>{8, 5, 2});
  CHECK(check_solution(inst, sol) == "");
  CHECK(st.attempts == 1);
  CHECK(!st.used_fallback);
}

TEST_CASE("expensive columns: overlap resolved for 204") {
  SolveStats st;
  auto inst = g33w();
  auto sol = solve(inst, {}, &st);
  REQUIRE(sol.feasible);
  CHECK(sol.total == 204);
  CHECK(check_solution(inst, sol) == "");
  CHECK(!st.used_fallback);
  // the cheap middle column goes to pair one; pair two pays the detour
  CHECK(sol.paths[0] == std::vector<Vertex>{0, 1, 4, 7, 6});
  CHECK(sol.paths[1] == std::vector<Vertex>{8, 5, 2});
}

TEST_CASE("star: no disjoint routing exists") {
  auto sol = solve(plus_graph());
  CHECK(!sol.feasible);
  CHECK(sol.paths.empty());
}

TEST_CASE("single pair reduces to a shortest path") {
  GenSpec s;
  s.rows = 4;
  s.cols = 4;
  s.k = 1;
  s.weights = GenSpec::Weights::Uniform;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    s.seed = seed;
    auto inst = generate(s);
    auto sol = solve(inst);
    REQUIRE(sol.feasible);
    auto sp = shortest_path(inst.g, base_weights(inst.g), inst.pairs[0].first,
                            inst.pairs[0].second);
    CHECK(sol.total == sp->second.base);
    CHECK(check_solution(inst, sol) == "");
  }
}

TEST_CASE("matches the exhaustive solver on small mixed instances") {
  int done = 0;
  for (int topo = 0; topo < 4; ++topo) {
    GenSpec s;
    s.rows = topo < 2 ? 3 : 4;
    s.cols = topo % 2 ? 4 : 3;
    s.k = topo == 3 ? 3 : 2;
    s.weights = GenSpec::Weights::Uniform;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      s.seed = seed;
      auto inst = generate(s);
      auto sol = solve(inst);
      auto ref = oracle_solve(inst, base_weights(inst.g));
      REQUIRE(sol.feasible == ref.feasible);
      if (sol.feasible) {
        CHECK(sol.total == ref.total.base);
        CHECK(check_solution(inst, sol) == "");
      }
      ++done;
    }
  }
  CHECK(done == 24);
}

TEST_CASE("subdivided grids work the same way") {
  GenSpec s;
  s.family = GenSpec::Family::SubdividedGrid;
  s.k = 2;
  s.weights = GenSpec::Weights::Uniform;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    s.seed = seed;
    auto inst = generate(s);
    auto sol = solve(inst);
    auto ref = oracle_solve(inst, base_weights(inst.g));
    REQUIRE(sol.feasible == ref.feasible);
    if (sol.feasible) CHECK(sol.total == ref.total.base);
  }
}

TEST_CASE("a three-region overlap component goes through the border tree") {
  auto inst = funnel_3x5();
  {
    auto rs = build_regions(inst, 1);
    auto comps = region_components(inst.k(), rs.borders);
    REQUIRE(comps.size() == 1);
    REQUIRE(comps[0].size() == 3);
    REQUIRE(rs.borders.size() == 2);
    CHECK(rs.borders[0].run == std::vector<Vertex>{7, 12});
    CHECK(rs.borders[1].run == std::vector<Vertex>{8, 9});
  }
  auto sol = solve(inst);
  auto ref = oracle_solve(inst, base_weights(inst.g));
  REQUIRE(sol.feasible);
  REQUIRE(ref.feasible);
  CHECK(sol.total == ref.total.base);
  CHECK(sol.total == 206);  // reroute pair 1 to 0-1-6-11 and pair 3 to 4-3-2
  CHECK(check_solution(inst, sol) == "");
}

TEST_CASE("a naturally overlapping three-pair instance matches the oracle") {
  // the one random draw in a wide sweep whose three regions form one chain
  GenSpec s;
  s.rows = s.cols = 3;
  s.k = 3;
  s.weights = GenSpec::Weights::Uniform;
  s.seed = 24;
  auto inst = generate(s);
  auto rs = build_regions(inst, 1);
  auto comps = region_components(inst.k(), rs.borders);
  REQUIRE(comps.size() == 1);
  REQUIRE(comps[0].size() == 3);
  auto sol = solve(inst);
  auto ref = oracle_solve(inst, base_weights(inst.g));
  REQUIRE(sol.feasible == ref.feasible);
  if (sol.feasible) {
    CHECK(sol.total == ref.total.base);
    CHECK(check_solution(inst, sol) == "");
  }
}

TEST_CASE("deterministic output") {
  auto inst = g33w();
  auto a = solution_text(solve(inst));
  auto b = solution_text(solve(inst));
  CHECK(a == b);
  GenSpec s;
  s.rows = 4;
  s.cols = 5;
  s.k = 2;
  s.weights = GenSpec::Weights::Uniform;
  s.seed = 17;
  auto inst2 = generate(s);
  CHECK(solution_text(solve(inst2)) == solution_text(solve(inst2)));
}

TEST_CASE("solution checker flags tampering") {
  auto inst = g33();
  auto sol = solve(inst);
  REQUIRE(sol.feasible);
  auto bad = sol;
  bad.total += 1;
  CHECK(check_solution(inst, bad) != "");
  bad = sol;
  bad.paths[0] = {0, 1, 4, 7, 6};  // right ends, wrong cost claim
  CHECK(check_solution(inst, bad) != "");
  bad = sol;
  bad.paths[1] = {8, 5, 2, 1};  // wrong endpoint
  CHECK(check_solution(inst, bad) != "");
  bad = sol;
  bad.paths[1] = sol.paths[0];  // shared vertices
  CHECK(check_solution(inst, bad) != "");
}

TEST_CASE("fallback can be disabled") {
  SolveOptions opt;
  opt.allow_fallback = false;
  // fine instances never reach the fallback either way
  auto sol = solve(g33w(), opt);
  CHECK(sol.total == 204);
}
