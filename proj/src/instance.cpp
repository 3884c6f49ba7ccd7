#include "kvdp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kvdp/error.hpp"

namespace kvdp {

namespace {

// Strips comments, returns one whitespace-split token stream per line.
std::vector<std::vector<std::string>> tokenize(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

long long to_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    require(pos == s.size(), Errc::ParseError, std::string("bad ") + what + ": " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::ParseError, std::string("bad ") + what + ": " + s);
  }
}

}  // namespace

Instance parse_instance(std::istream& in) {
  auto lines = tokenize(in);
  size_t at = 0;
  auto next = [&]() -> const std::vector<std::string>& {
    require(at < lines.size(), Errc::ParseError, "unexpected end of input");
    return lines[at++];
  };

  {
    const auto& hdr = next();
    require(hdr.size() == 2 && hdr[0] == "planar-kvdp" && hdr[1] == "v1", Errc::ParseError,
            "expected header 'planar-kvdp v1'");
  }
  const auto& dims = next();
  require(dims.size() == 3, Errc::ParseError, "expected 'n m k' line");
  long long n = to_int(dims[0], "n"), m = to_int(dims[1], "m"), k = to_int(dims[2], "k");
  require(n >= 1 && m >= 0 && k >= 0, Errc::ParseError, "bad dimensions");

  std::vector<std::vector<Vertex>> rot(n);
  std::vector<char> seen(n, 0);
  for (long long i = 0; i < n; ++i) {
    const auto& ln = next();
    require(ln.size() >= 2 && ln[0] == "vertex", Errc::ParseError, "expected vertex line");
    long long id = to_int(ln[1], "vertex id");
    require(id >= 0 && id < n, Errc::UnknownVertex, "vertex id out of range: " + ln[1]);
    require(!seen[id], Errc::ParseError, "duplicate vertex line for id " + ln[1]);
    seen[id] = 1;
    for (size_t j = 2; j < ln.size(); ++j) {
      long long v = to_int(ln[j], "neighbor");
      require(v >= 0 && v < n, Errc::UnknownVertex, "neighbor out of range: " + ln[j]);
      rot[id].push_back((Vertex)v);
    }
  }

  std::vector<std::pair<std::pair<Vertex, Vertex>, std::int64_t>> edges;
  for (long long i = 0; i < m; ++i) {
    const auto& ln = next();
    require(ln.size() == 4 && ln[0] == "edge", Errc::ParseError, "expected edge line");
    edges.push_back({{(Vertex)to_int(ln[1], "edge endpoint"), (Vertex)to_int(ln[2], "edge endpoint")},
                     to_int(ln[3], "edge length")});
  }

  Instance inst;
  inst.g = build_embedding((int)n, rot, edges);
  for (long long i = 0; i < k; ++i) {
    const auto& ln = next();
    require(ln.size() == 3 && ln[0] == "pair", Errc::ParseError, "expected pair line");
    long long s = to_int(ln[1], "terminal"), t = to_int(ln[2], "terminal");
    require(s >= 0 && s < n && t >= 0 && t < n, Errc::UnknownVertex, "terminal out of range");
    inst.pairs.emplace_back((Vertex)s, (Vertex)t);
  }
  require(at == lines.size(), Errc::ParseError, "trailing content after pair lines");
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  return parse_instance(in);
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  const auto& g = inst.g;
  out << "planar-kvdp v1\n" << g.n() << ' ' << g.m() << ' ' << inst.k() << '\n';
  for (Vertex u = 0; u < g.n(); ++u) {
    out << "vertex " << u;
    for (Vertex v : g.rot[u]) out << ' ' << v;
    out << '\n';
  }
  for (int e = 0; e < g.m(); ++e)
    out << "edge " << g.edges[e].first << ' ' << g.edges[e].second << ' ' << g.length[e] << '\n';
  for (auto [s, t] : inst.pairs) out << "pair " << s << ' ' << t << '\n';
  return out.str();
}

void validate_instance(const Instance& inst) {
  const auto& g = inst.g;
  const int k = inst.k();
  require(k >= 1, Errc::ParseError, "instance has no terminal pairs");

  std::vector<Vertex> want;  // s1,t1,s2,t2,...
  for (auto [s, t] : inst.pairs) {
    want.push_back(s);
    want.push_back(t);
  }
  {
    auto sorted = want;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            Errc::TerminalsNotDistinct, "terminals are not pairwise distinct");
  }

  std::vector<char> is_term(g.n(), 0);
  for (Vertex v : want) is_term[v] = 1;
  std::vector<char> on_bd(g.n(), 0);
  std::vector<Vertex> occ;  // terminal occurrences along the ccw boundary walk
  for (Vertex v : g.boundary) {
    on_bd[v] = 1;
    if (is_term[v]) occ.push_back(v);
  }
  for (Vertex v : want)
    require(on_bd[v], Errc::TerminalNotOnBoundary,
            "terminal " + std::to_string(v) + " is not on the outer face");

  // A terminal sitting at a cut vertex shows up more than once in the walk;
  // that fails here too because occ ends up longer than want.
  bool ok = occ.size() == want.size();
  if (ok) {
    int L = (int)want.size();
    bool any = false;
    for (int r = 0; r < L && !any; ++r) {
      bool match = true;
      for (int i = 0; i < L && match; ++i) match = occ[(r + i) % L] == want[i];
      any = match;
    }
    ok = any;
  }
  require(ok, Errc::OrderViolation,
          "terminals do not appear in ccw order s1,t1,...,sk,tk on the outer face");
}

std::vector<Vertex> boundary_arc(const RotationGraph& g, Vertex from, Vertex to) {
  const auto& bd = g.boundary;
  const int L = (int)bd.size();
  int p = -1, q = -1;
  for (int i = 0; i < L; ++i) {
    if (bd[i] == from) {
      require(p < 0, Errc::OrderViolation, "boundary arc endpoint occurs twice");
      p = i;
    }
    if (bd[i] == to) {
      require(q < 0, Errc::OrderViolation, "boundary arc endpoint occurs twice");
      q = i;
    }
  }
  require(p >= 0 && q >= 0, Errc::TerminalNotOnBoundary, "boundary arc endpoint not on outer face");
  std::vector<Vertex> arc;
  for (int i = p;; i = (i + 1) % L) {
    arc.push_back(bd[i]);
    if (i == q) break;
  }
  return arc;
}

}  // namespace kvdp
