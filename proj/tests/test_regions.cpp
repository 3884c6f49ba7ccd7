#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "kvdp/regions.hpp"

using namespace kvdp;
using namespace kvdp::testing;

TEST_CASE("disjoint regions on the unit grid") {
  auto rs = build_regions(g33(), 1);
  REQUIRE(rs.regions.size() == 2);
  CHECK(rs.regions[0].path == std::vector<Vertex>{0, 3, 6});
  CHECK(rs.regions[0].arc == std::vector<Vertex>{0, 3, 6});
  CHECK(rs.regions[1].path == std::vector<Vertex>{8, 5, 2});
  CHECK(rs.borders.empty());
  CHECK(region_components(2, rs.borders) ==
        std::vector<std::vector<int>>{{0}, {1}});

  // a degenerate region is just its path
  for (Vertex v = 0; v < 9; ++v)
    CHECK((bool)rs.regions[0].sub.v[v] == (v == 0 || v == 3 || v == 6));
  CHECK(rs.regions[0].pos_on_path[3] == 1);
  CHECK(rs.regions[0].pos_on_path[4] == -1);
}

TEST_CASE("overlapping regions share one opposite-direction border") {
  auto inst = g33w();
  auto rs = build_regions(inst, 1);
  CHECK(rs.regions[0].path == std::vector<Vertex>{0, 1, 4, 7, 6});
  CHECK(rs.regions[0].path_cost.base == 4);
  CHECK(rs.regions[1].path == std::vector<Vertex>{8, 7, 4, 1, 2});

  int count0 = 0;
  for (Vertex v = 0; v < 9; ++v) count0 += rs.regions[0].sub.v[v] ? 1 : 0;
  CHECK(count0 == 6);  // 0 1 3 4 6 7
  CHECK(rs.regions[0].sub.v[3]);
  CHECK(!rs.regions[0].sub.v[8]);

  REQUIRE(rs.borders.size() == 1);
  const Border& b = rs.borders[0];
  CHECK(b.i == 0);
  CHECK(b.j == 1);
  CHECK(b.run == std::vector<Vertex>{1, 4, 7});
  CHECK(b.i_lo == 1);
  CHECK(b.i_hi == 3);
  CHECK(b.j_lo == 1);
  CHECK(b.j_hi == 3);
  CHECK(region_components(2, rs.borders) == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("determinism and seed sensitivity") {
  auto inst = g33w();
  auto a = build_regions(inst, 5);
  auto b = build_regions(inst, 5);
  CHECK(a.regions[0].path == b.regions[0].path);
  CHECK(a.w == b.w);
  auto c = build_regions(inst, 6);
  CHECK(a.regions[0].path == c.regions[0].path);  // unique optimum survives reseeding
  CHECK(a.w != c.w);
}

TEST_CASE("region arcs follow the ccw boundary") {
  GenSpec s;
  s.rows = 3;
  s.cols = 4;
  s.k = 3;
  auto inst = generate(s);
  auto rs = build_regions(inst, 1);
  for (int i = 0; i < 3; ++i) {
    CHECK(rs.regions[i].arc.front() == inst.pairs[i].first);
    CHECK(rs.regions[i].arc.back() == inst.pairs[i].second);
    CHECK(rs.regions[i].path.front() == inst.pairs[i].first);
    CHECK(rs.regions[i].path.back() == inst.pairs[i].second);
    // every region stays inside the full graph and contains its own walk
    for (Vertex v : rs.regions[i].path) CHECK(rs.regions[i].sub.v[v]);
    for (Vertex v : rs.regions[i].arc) CHECK(rs.regions[i].sub.v[v]);
  }
}

TEST_CASE("component split covers every region once") {
  std::vector<Border> borders(2);
  borders[0].i = 0;
  borders[0].j = 2;
  borders[1].i = 2;
  borders[1].j = 3;
  auto comps = region_components(5, borders);
  CHECK(comps == std::vector<std::vector<int>>{{0, 2, 3}, {1}, {4}});
}
