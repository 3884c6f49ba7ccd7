#pragma once

#include <string>

#include "kvdp/dp_engine.hpp"

namespace kvdp {

// Draws the embedded graph with the outer cycle pinned to a circle and
// interior vertices relaxed to the barycenter of their neighbors. Solution
// paths, when given, are overlaid in color.
std::string render_svg(const Instance& inst, const Solution* sol = nullptr);

}  // namespace kvdp
