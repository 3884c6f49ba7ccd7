#include "kvdp/svg.hpp"

#include <cmath>
#include <sstream>

namespace kvdp {

std::string render_svg(const Instance& inst, const Solution* sol) {
  const auto& g = inst.g;
  const double W = 640, H = 640, R = 280;
  std::vector<double> x(g.n(), W / 2), y(g.n(), H / 2);
  std::vector<char> pinned(g.n(), 0);
  const auto& b = g.boundary;
  const double pi = std::acos(-1.0);
  for (size_t i = 0; i < b.size(); ++i) {
    double ang = 2 * pi * (double)i / (double)b.size();
    // ccw boundary order, drawn counterclockwise in screen coordinates
    x[b[i]] = W / 2 + R * std::cos(ang);
    y[b[i]] = H / 2 - R * std::sin(ang);
    pinned[b[i]] = 1;
  }
  for (int it = 0; it < 400; ++it)
    for (Vertex v = 0; v < g.n(); ++v) {
      if (pinned[v] || g.rot[v].empty()) continue;
      double sx = 0, sy = 0;
      for (Vertex u : g.rot[v]) {
        sx += x[u];
        sy += y[u];
      }
      x[v] = sx / (double)g.rot[v].size();
      y[v] = sy / (double)g.rot[v].size();
    }

  static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  std::ostringstream s;
  s << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    s << "<line x1='" << x[u] << "' y1='" << y[u] << "' x2='" << x[v] << "' y2='" << y[v]
      << "' stroke='#bbb' stroke-width='1.5'/>\n";
    s << "<text x='" << (x[u] + x[v]) / 2 << "' y='" << (y[u] + y[v]) / 2
      << "' font-size='9' fill='#999'>" << g.length[e] << "</text>\n";
  }
  if (sol && sol->feasible)
    for (size_t i = 0; i < sol->paths.size(); ++i) {
      const auto& p = sol->paths[i];
      const char* col = palette[i % 8];
      for (size_t q = 0; q + 1 < p.size(); ++q)
        s << "<line x1='" << x[p[q]] << "' y1='" << y[p[q]] << "' x2='" << x[p[q + 1]] << "' y2='"
          << y[p[q + 1]] << "' stroke='" << col << "' stroke-width='3'/>\n";
    }
  for (Vertex v = 0; v < g.n(); ++v) {
    s << "<circle cx='" << x[v] << "' cy='" << y[v] << "' r='4' fill='#333'/>\n";
    s << "<text x='" << x[v] + 5 << "' y='" << y[v] - 5 << "' font-size='11'>" << v
      << "</text>\n";
  }
  for (size_t i = 0; i < inst.pairs.size(); ++i) {
    const char* col = palette[i % 8];
    for (Vertex t : {inst.pairs[i].first, inst.pairs[i].second})
      s << "<circle cx='" << x[t] << "' cy='" << y[t] << "' r='7' fill='none' stroke='" << col
        << "' stroke-width='2.5'/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace kvdp
