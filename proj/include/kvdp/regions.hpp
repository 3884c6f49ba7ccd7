#pragma once

#include <cstdint>
#include <vector>

#include "kvdp/instance.hpp"
#include "kvdp/weights.hpp"

namespace kvdp {

// One region per terminal pair: the part of the graph enclosed between the
// unique shortest path P_i = s_i..t_i (unique under perturbed weights) and
// the ccw outer-boundary arc C_i = s_i..t_i.
struct Region {
  std::vector<Vertex> path;      // P_i
  std::vector<Vertex> arc;       // C_i
  Weight path_cost{};
  SubMask sub;                   // vertices and edges of the region
  std::vector<int> pos_on_path;  // index of each graph vertex in P_i, or -1
};

// Nonempty intersection of two regions. It always materializes as one
// contiguous stretch shared by both paths, walked in opposite directions;
// anything else is rejected as BorderNotPath.
struct Border {
  int i = -1, j = -1;        // region indices, i < j
  std::vector<Vertex> run;   // shared stretch in P_i order
  int i_lo = -1, i_hi = -1;  // run == P_i[i_lo..i_hi]
  int j_lo = -1, j_hi = -1;  // reversed run == P_j[j_lo..j_hi]
};

struct RegionSet {
  std::vector<Weight> w;  // perturbed weights everything downstream uses
  std::vector<Region> regions;
  std::vector<Border> borders;  // sorted by (i, j)
};

// Throws PerturbationCollision when the random tags fail to break a tie,
// BorderNotPath when an intersection is not a clean opposite-direction run,
// AuditFailed when there are more borders than a planar arrangement allows.
RegionSet build_regions(const Instance& inst, std::uint64_t seed);

// Connected components of the region adjacency (border) graph, each sorted.
// Regions in different components share no vertex, so they solve separately.
std::vector<std::vector<int>> region_components(int k, const std::vector<Border>& borders);

}  // namespace kvdp
