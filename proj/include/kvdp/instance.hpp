#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kvdp/rotation_graph.hpp"

namespace kvdp {

struct Instance {
  RotationGraph g;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // (s_i, t_i)

  int k() const { return (int)pairs.size(); }
};

// Text format:
//   planar-kvdp v1
//   n m k
//   vertex <id> <ccw neighbor list>     (n lines)
//   edge <u> <v> <length>               (m lines)
//   pair <s> <t>                        (k lines)
// '#' starts a comment. Vertex ids are dense and 0-based.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);
std::string write_instance(const Instance& inst);

// Checks the terminal layout: distinct, on the outer boundary, and their
// cyclic ccw order along it is exactly s1,t1,s2,t2,... (any rotation).
// Throws TerminalsNotDistinct / TerminalNotOnBoundary / OrderViolation.
void validate_instance(const Instance& inst);

// ccw boundary arc from `from` to `to`, using each terminal's unique
// position in the validated boundary walk.
std::vector<Vertex> boundary_arc(const RotationGraph& g, Vertex from, Vertex to);

}  // namespace kvdp
