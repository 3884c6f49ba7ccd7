#pragma once

#include <iosfwd>
#include <string>

#include "kvdp/dp_engine.hpp"

namespace kvdp {

// Text form: either a single "infeasible" line, or "total <sum>" followed by
// one "path <index> <v0> <v1> ..." line per pair, in pair order.
void write_solution(std::ostream& os, const Solution& sol);
Solution parse_solution(std::istream& is);
std::string solution_text(const Solution& sol);

}  // namespace kvdp
