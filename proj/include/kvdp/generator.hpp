#pragma once

#include <cstdint>

#include "kvdp/instance.hpp"

namespace kvdp {

// Reproducible grid-based test instances. Terminals are spread evenly along
// the outer cycle in ccw order s1,t1,...,sk,tk starting at vertex 0.
struct GenSpec {
  enum class Family { Grid, SubdividedGrid };
  enum class Weights { Unit, Uniform, AdversarialColumns };

  Family family = Family::Grid;
  int rows = 3, cols = 3;
  int k = 2;
  Weights weights = Weights::Unit;
  std::int64_t lo = 1, hi = 9;  // uniform range
  std::uint64_t seed = 0;
};

Instance generate(const GenSpec& spec);

}  // namespace kvdp
