#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kvdp/rotation_graph.hpp"
#include "kvdp/weights.hpp"

namespace kvdp {

// Per-edge weights with pairwise-distinct random tags. Tags are drawn from
// [1, 2^b) with b = 2*ceil(log2 m) + 16, so tie-breaking tag sums rarely
// collide; collisions are detected downstream and retried with a new seed.
std::vector<Weight> perturb(const RotationGraph& g, std::uint64_t seed);

// Plain weights (tag 0) for unperturbed runs.
std::vector<Weight> base_weights(const RotationGraph& g);

struct DijkstraTree {
  Vertex src = -1;
  std::vector<Cost> dist;      // nullopt where unreachable
  std::vector<Vertex> parent;  // -1 at src and unreachable vertices
  // Some vertex was reached at the same Weight via two different parents.
  // Under perturbed weights that means the tie-breaking failed.
  bool collision = false;
};

// Dijkstra restricted to `sub` (when given). Vertices in `banned_internal`
// may terminate a path but are never expanded, except the source itself;
// endpoints are always exempt from the ban.
DijkstraTree dijkstra(const RotationGraph& g, const std::vector<Weight>& w, Vertex src,
                      const SubMask* sub = nullptr,
                      const std::vector<char>* banned_internal = nullptr);

// Path src..dst from a tree, or nullopt when dst is unreachable.
std::optional<std::vector<Vertex>> extract_path(const DijkstraTree& t, Vertex dst);

std::optional<std::pair<std::vector<Vertex>, Weight>> shortest_path(
    const RotationGraph& g, const std::vector<Weight>& w, Vertex src, Vertex dst,
    const SubMask* sub = nullptr, const std::vector<char>* banned_internal = nullptr);

}  // namespace kvdp
