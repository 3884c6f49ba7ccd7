#pragma once

#include <vector>

#include "kvdp/regions.hpp"

namespace kvdp {

// Containment tree over the borders of one connected component of the
// region adjacency graph. Regions get fresh 1-based labels (a rotation of
// their ccw order) chosen so that some border between cyclically adjacent
// regions spans [1, k']; with that, every border is an interval [lo, hi] of
// labels, the root is [1, k'], and parent = smallest properly containing
// interval. The geometry this relies on is never assumed: laminarity, gap
// coverage, and run ordering along the shared paths are all checked, and
// any violation surfaces as AuditFailed so the caller can retry or fall
// back to the reference solver.
struct TreeNode {
  int lo = 0, hi = 0;       // renumbered labels, lo < hi
  int border = -1;          // index into RegionSet::borders
  std::vector<Vertex> run;  // border stretch ordered along P_lo
  int lo_a = -1, lo_b = -1;  // run position interval on P_lo
  int hi_a = -1, hi_b = -1;  // run position interval on P_hi
  int parent = -1;
  std::vector<int> children;  // ascending by (lo, hi)
};

struct BorderTree {
  std::vector<int> order;       // order[q] = original region of label q+1
  std::vector<int> new_label;   // per original region, 1-based; 0 = outside
  std::vector<TreeNode> nodes;  // nodes[root] spans [1, k']
  int root = -1;

  int k() const { return (int)order.size(); }
};

// component: sorted original region indices of one adjacency component.
BorderTree build_border_tree(const RegionSet& rs, const std::vector<int>& component);

}  // namespace kvdp
