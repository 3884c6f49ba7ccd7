#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "kvdp/pair_solver.hpp"

using namespace kvdp;
using namespace kvdp::testing;

static void check_pair(const RotationGraph& g, const std::vector<Weight>& w, const PairResult& r,
                       Vertex s1, Vertex t1, Vertex s2, Vertex t2) {
  REQUIRE(!r.path1.empty());
  REQUIRE(!r.path2.empty());
  CHECK(r.path1.front() == s1);
  CHECK(r.path1.back() == t1);
  CHECK(r.path2.front() == s2);
  CHECK(r.path2.back() == t2);
  CHECK(is_simple_path(r.path1));
  CHECK(is_simple_path(r.path2));
  for (Vertex a : r.path1)
    for (Vertex b : r.path2) CHECK(a != b);
  Weight sum{};
  for (const auto* p : {&r.path1, &r.path2})
    for (size_t q = 0; q + 1 < p->size(); ++q) {
      int e = g.edge_between((*p)[q], (*p)[q + 1]);
      REQUIRE(e >= 0);
      sum += w[e];
    }
  CHECK(sum == r.total);
}

TEST_CASE("straight decomposition on the unit grid") {
  auto g = g33().g;
  auto w = base_weights(g);
  auto full = SubMask::all(g.n(), g.m());
  auto r = min_sum_pair(g, w, full, 0, 6, 8, 2);
  REQUIRE(r.has_value());
  check_pair(g, w, *r, 0, 6, 8, 2);
  CHECK(r->total.base == 4);
}

TEST_CASE("flow crosses but the fixed pairing costs 203") {
  auto g = g33w().g;
  auto w = base_weights(g);
  auto full = SubMask::all(g.n(), g.m());
  // crossed routing would pay 3 (4-1 and 8-7-6); the pairing forbids it
  auto r = min_sum_pair(g, w, full, 4, 6, 8, 1);
  REQUIRE(r.has_value());
  check_pair(g, w, *r, 4, 6, 8, 1);
  CHECK(r->total.base == 203);
}

TEST_CASE("four-cycle: the uncrossed pairing has no room") {
  std::vector<std::vector<Vertex>> rot = {{3, 1}, {0, 2}, {1, 3}, {2, 0}};
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::int64_t>> edges = {
      {{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{0, 3}, 1}};
  auto g = build_embedding(4, std::move(rot), edges);
  auto w = base_weights(g);
  auto full = SubMask::all(g.n(), g.m());
  CHECK(!min_sum_pair(g, w, full, 0, 2, 1, 3).has_value());
  auto ok = min_sum_pair(g, w, full, 0, 1, 3, 2);
  REQUIRE(ok.has_value());
  CHECK(ok->total.base == 2);
}

TEST_CASE("trivial and degenerate endpoints") {
  auto g = g33().g;
  auto w = base_weights(g);
  auto full = SubMask::all(g.n(), g.m());

  auto both = min_sum_pair(g, w, full, 4, 4, 0, 2);
  REQUIRE(both.has_value());
  CHECK(both->path1 == std::vector<Vertex>{4});
  CHECK(both->total.base == 2);
  check_pair(g, w, *both, 4, 4, 0, 2);

  // shared endpoint across the two paths is impossible by definition
  CHECK(!min_sum_pair(g, w, full, 0, 4, 4, 8).has_value());
  CHECK(!min_sum_pair(g, w, full, 0, 4, 0, 8).has_value());

  // both trivial
  auto tt = min_sum_pair(g, w, full, 3, 3, 5, 5);
  REQUIRE(tt.has_value());
  CHECK(tt->total == Weight{});

  // endpoints outside the mask
  auto small = induced_mask(g, {0, 1, 2});
  CHECK(!min_sum_pair(g, w, small, 0, 2, 3, 5).has_value());
}

TEST_CASE("agrees with exhaustive search on small weighted grids") {
  int checked = 0;
  for (int topo = 0; topo < 3; ++topo) {
    GenSpec s;
    s.rows = topo == 0 ? 2 : 3;
    s.cols = topo == 2 ? 4 : 3;
    s.k = 2;
    s.weights = GenSpec::Weights::Uniform;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      s.seed = seed;
      auto inst = generate(s);
      auto w = base_weights(inst.g);
      auto full = SubMask::all(inst.g.n(), inst.g.m());
      const auto& b = inst.g.boundary;
      size_t L = b.size();
      // several pairings of four spread boundary vertices, not all planar
      Vertex q0 = b[0], q1 = b[L / 4], q2 = b[L / 2], q3 = b[3 * L / 4];
      std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> trials[] = {
          {{q0, q1}, {q2, q3}}, {{q0, q2}, {q1, q3}}, {{q0, q3}, {q1, q2}}};
      for (auto [p1, p2] : trials) {
        auto got = min_sum_pair(inst.g, w, full, p1.first, p1.second, p2.first, p2.second);
        auto want = brute_pair(inst.g, w, p1.first, p1.second, p2.first, p2.second);
        REQUIRE(got.has_value() == want.feasible);
        if (got) {
          CHECK(got->total.base == want.total.base);
          check_pair(inst.g, w, *got, p1.first, p1.second, p2.first, p2.second);
        }
        ++checked;
      }
    }
  }
  CHECK(checked == 72);
}
