#include "kvdp/solution.hpp"

#include <ostream>
#include <sstream>

#include "kvdp/error.hpp"

namespace kvdp {

void write_solution(std::ostream& os, const Solution& sol) {
  if (!sol.feasible) {
    os << "infeasible\n";
    return;
  }
  os << "total " << sol.total << "\n";
  for (size_t i = 0; i < sol.paths.size(); ++i) {
    os << "path " << i;
    for (Vertex v : sol.paths[i]) os << ' ' << v;
    os << "\n";
  }
}

std::string solution_text(const Solution& sol) {
  std::ostringstream ss;
  write_solution(ss, sol);
  return ss.str();
}

Solution parse_solution(std::istream& is) {
  Solution sol;
  std::string line;
  bool saw_header = false;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "infeasible") {
      require(!saw_header, Errc::ParseError, "infeasible after total");
      return sol;
    }
    if (word == "total") {
      require(!saw_header, Errc::ParseError, "duplicate total line");
      saw_header = true;
      require((bool)(ls >> sol.total), Errc::ParseError, "total needs a number");
      sol.feasible = true;
    } else if (word == "path") {
      require(saw_header, Errc::ParseError, "path before total");
      size_t idx;
      require((bool)(ls >> idx), Errc::ParseError, "path needs an index");
      require(idx == sol.paths.size(), Errc::ParseError, "path lines out of order");
      std::vector<Vertex> p;
      Vertex v;
      while (ls >> v) p.push_back(v);
      require(!p.empty(), Errc::ParseError, "empty path line");
      sol.paths.push_back(std::move(p));
    } else {
      fail(Errc::ParseError, "unknown solution line: " + word);
    }
  }
  require(saw_header, Errc::ParseError, "missing total or infeasible line");
  return sol;
}

}  // namespace kvdp
