#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "kvdp/shortest.hpp"

using namespace kvdp;

TEST_CASE("plain distances on the unit grid") {
  auto g = testing::g33().g;
  auto w = base_weights(g);
  auto t = dijkstra(g, w, 0);
  CHECK(t.dist[0] == Cost(Weight{}));
  CHECK(t.dist[8]->base == 4);
  CHECK(t.dist[4]->base == 2);
  auto p = extract_path(t, 8);
  REQUIRE(p.has_value());
  CHECK(p->front() == 0);
  CHECK(p->back() == 8);
  CHECK(p->size() == 5);
}

TEST_CASE("perturbed runs break ties and report collisions honestly") {
  auto g = testing::g33().g;
  auto w = perturb(g, 1);
  auto t = dijkstra(g, w, 0);
  CHECK(!t.collision);  // distinct tags, generic position
  auto unperturbed = dijkstra(g, base_weights(g), 0);
  CHECK(unperturbed.collision);  // many equal-length routes to corner 8

  // same seed, same tree; the perturbed pick projects onto a true shortest path
  auto t2 = dijkstra(g, w, 0);
  CHECK(t.parent == t2.parent);
  CHECK(extract_path(t, 8)->size() == 5);
}

TEST_CASE("the expensive-columns grid pins the left path") {
  auto inst = testing::g33w();
  auto w = perturb(inst.g, 1);
  auto sp = shortest_path(inst.g, w, 0, 6);
  REQUIRE(sp.has_value());
  CHECK(sp->first == std::vector<Vertex>{0, 1, 4, 7, 6});
  CHECK(sp->second.base == 4);
}

TEST_CASE("masks and internal bans restrict the search") {
  auto g = testing::g33().g;
  auto w = base_weights(g);

  auto m = induced_mask(g, {0, 1, 2, 5, 8});  // top row plus right column
  auto sp = shortest_path(g, w, 0, 8, &m);
  REQUIRE(sp.has_value());
  CHECK(sp->first == std::vector<Vertex>{0, 1, 2, 5, 8});

  auto m2 = induced_mask(g, {0, 1, 2});
  CHECK(!shortest_path(g, w, 0, 8, &m2).has_value());

  // banned vertices may end a path but not continue one
  std::vector<char> ban(g.n(), 0);
  ban[4] = 1;
  auto t = dijkstra(g, w, 0, nullptr, &ban);
  CHECK(t.dist[4]->base == 2);  // still reachable as an endpoint
  auto via = extract_path(t, 8);
  REQUIRE(via.has_value());
  for (size_t i = 0; i + 1 < via->size(); ++i) CHECK((*via)[i] != 4);

  // a banned source still expands
  std::vector<char> ban0(g.n(), 0);
  ban0[0] = 1;
  auto t0 = dijkstra(g, w, 0, nullptr, &ban0);
  CHECK(t0.dist[8].has_value());

  SUBCASE("trivial source-equals-target path") {
    auto same = shortest_path(g, w, 3, 3);
    REQUIRE(same.has_value());
    CHECK(same->first == std::vector<Vertex>{3});
    CHECK(same->second == Weight{});
  }
}
