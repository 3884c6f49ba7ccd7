#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "kvdp/instance.hpp"

using namespace kvdp;

static const char* g33_text = R"(# tiny grid
planar-kvdp v1
4 4 2
vertex 0 2 1
vertex 1 0 3
vertex 2 3 0
vertex 3 1 2
edge 0 1 1
edge 0 2 1
edge 1 3 5
edge 2 3 1
pair 0 3
pair 2 1
)";

TEST_CASE("parse, validate and round-trip") {
  std::istringstream in(g33_text);
  Instance inst = parse_instance(in);
  CHECK(inst.g.n() == 4);
  CHECK(inst.g.m() == 4);
  CHECK(inst.k() == 2);
  CHECK(inst.pairs[0] == std::pair<Vertex, Vertex>{0, 3});
  CHECK(inst.g.length[inst.g.edge_between(1, 3)] == 5);

  std::istringstream again(write_instance(inst));
  Instance inst2 = parse_instance(again);
  CHECK(write_instance(inst2) == write_instance(inst));
  CHECK(inst2.g.boundary == inst.g.boundary);
}

TEST_CASE("terminal layout rules") {
  auto inst = testing::g33();
  CHECK_NOTHROW(validate_instance(inst));

  auto code_of = [](const Instance& bad) {
    try {
      validate_instance(bad);
    } catch (const Error& e) {
      return e.code;
    }
    return Errc::ParseError;  // anything that is not a layout code
  };

  auto dup = inst;
  dup.pairs[1].second = 0;
  CHECK(code_of(dup) == Errc::TerminalsNotDistinct);

  auto interior = inst;
  interior.pairs[0].second = 4;
  CHECK(code_of(interior) == Errc::TerminalNotOnBoundary);

  auto crossed = inst;  // (0,8),(6,2): pairs interleave the wrong way
  crossed.pairs = {{0, 8}, {6, 2}};
  CHECK(code_of(crossed) == Errc::OrderViolation);

  // rotating the whole layout is fine: (8,2),(0,6) is the same cyclic order
  auto rotated = inst;
  rotated.pairs = {{8, 2}, {0, 6}};
  CHECK_NOTHROW(validate_instance(rotated));
}

TEST_CASE("boundary arcs walk ccw inclusively") {
  auto g = testing::g33().g;  // boundary 0 3 6 7 8 5 2 1
  CHECK(boundary_arc(g, 0, 6) == std::vector<Vertex>{0, 3, 6});
  CHECK(boundary_arc(g, 6, 0) == std::vector<Vertex>{6, 7, 8, 5, 2, 1, 0});
  CHECK(boundary_arc(g, 8, 8) == std::vector<Vertex>{8});
  CHECK(boundary_arc(g, 1, 3) == std::vector<Vertex>{1, 0, 3});
}

TEST_CASE("parse errors carry context") {
  auto bad = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_instance(in), Error);
  };
  bad("planar-kvdp v2\n1 0 0\nvertex 0\n");
  bad("planar-kvdp v1\n2 1 0\nvertex 0 1\nvertex 1 0\nedge 0 5 1\n");
  bad("planar-kvdp v1\n1 0 1\nvertex 0\npair 0 0 extra\n");
  bad("planar-kvdp v1\n2 1 0\nvertex 0 1\nvertex 0 1\nedge 0 1 1\n");  // dup vertex
  bad("");
}
