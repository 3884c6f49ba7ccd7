#include "kvdp/border_tree.hpp"

#include <algorithm>

#include "kvdp/error.hpp"

namespace kvdp {

namespace {

BorderTree attempt(const RegionSet& rs, const std::vector<int>& component,
                   const std::vector<int>& border_ids, int offset) {
  const int kc = (int)component.size();
  BorderTree t;
  t.order.resize(kc);
  t.new_label.assign(rs.regions.size(), 0);
  for (int lbl = 1; lbl <= kc; ++lbl) {
    int orig = component[(lbl - 1 + offset) % kc];
    t.order[lbl - 1] = orig;
    t.new_label[orig] = lbl;
  }

  for (int bid : border_ids) {
    const Border& b = rs.borders[bid];
    TreeNode nd;
    nd.border = bid;
    int li = t.new_label[b.i], lj = t.new_label[b.j];
    if (li < lj) {
      nd.lo = li;
      nd.hi = lj;
      nd.run = b.run;
      nd.lo_a = b.i_lo;
      nd.lo_b = b.i_hi;
      nd.hi_a = b.j_lo;
      nd.hi_b = b.j_hi;
    } else {
      nd.lo = lj;
      nd.hi = li;
      nd.run.assign(b.run.rbegin(), b.run.rend());
      nd.lo_a = b.j_lo;
      nd.lo_b = b.j_hi;
      nd.hi_a = b.i_lo;
      nd.hi_b = b.i_hi;
    }
    t.nodes.push_back(std::move(nd));
  }
  std::sort(t.nodes.begin(), t.nodes.end(), [](const TreeNode& a, const TreeNode& b) {
    return std::pair(a.lo, a.hi) < std::pair(b.lo, b.hi);
  });

  const int nn = (int)t.nodes.size();
  for (int a = 0; a < nn; ++a)
    for (int b = a + 1; b < nn; ++b) {
      const TreeNode &x = t.nodes[a], &y = t.nodes[b];
      require(!(x.lo < y.lo && y.lo < x.hi && x.hi < y.hi), Errc::AuditFailed,
              "crossing border intervals");
    }

  for (int a = 0; a < nn; ++a) {
    const TreeNode& x = t.nodes[a];
    if (x.lo == 1 && x.hi == kc) {
      require(t.root < 0, Errc::AuditFailed, "two full-span borders");
      t.root = a;
      continue;
    }
    int best = -1;
    for (int b = 0; b < nn; ++b) {
      if (b == a) continue;
      const TreeNode& y = t.nodes[b];
      if (y.lo <= x.lo && x.hi <= y.hi) {
        if (best < 0 || y.hi - y.lo < t.nodes[best].hi - t.nodes[best].lo) best = b;
      }
    }
    require(best >= 0, Errc::AuditFailed, "border has no parent interval");
    t.nodes[a].parent = best;
    t.nodes[best].children.push_back(a);
  }
  require(t.root >= 0, Errc::AuditFailed, "root border missing after renumbering");

  for (int a = 0; a < nn; ++a) {
    TreeNode& nd = t.nodes[a];
    // already (lo, hi)-sorted globally, so child lists inherit the order
    if (nd.children.empty()) {
      require(nd.hi == nd.lo + 1, Errc::AuditFailed, "childless border spans a gap");
      continue;
    }
    const TreeNode& first = t.nodes[nd.children.front()];
    require(first.lo == nd.lo || first.lo == nd.lo + 1, Errc::AuditFailed,
            "uncovered region after the border's left end");
    for (size_t q = 0; q + 1 < nd.children.size(); ++q) {
      const TreeNode &cl = t.nodes[nd.children[q]], &cr = t.nodes[nd.children[q + 1]];
      require(cr.lo == cl.hi || cr.lo == cl.hi + 1, Errc::AuditFailed,
              "uncovered region between sibling borders");
      if (cr.lo == cl.hi)
        require(cl.hi_b <= cr.lo_a, Errc::AuditFailed,
                "sibling border runs out of order along their shared path");
    }
    const TreeNode& last = t.nodes[nd.children.back()];
    require(nd.hi == last.hi || nd.hi == last.hi + 1, Errc::AuditFailed,
            "uncovered region before the border's right end");
    if (first.lo == nd.lo)
      require(nd.lo_b <= first.lo_a, Errc::AuditFailed,
              "first child border precedes its parent along the shared path");
    if (last.hi == nd.hi)
      require(last.hi_b <= nd.hi_a, Errc::AuditFailed,
              "parent border precedes its last child along the shared path");
  }
  return t;
}

}  // namespace

BorderTree build_border_tree(const RegionSet& rs, const std::vector<int>& component) {
  const int kc = (int)component.size();
  require(kc >= 2, Errc::AuditFailed, "border tree needs at least two regions");
  std::vector<int> local(rs.regions.size(), -1);
  for (int q = 0; q < kc; ++q) local[component[q]] = q;

  std::vector<int> border_ids;
  std::vector<std::vector<int>> at(kc, std::vector<int>(kc, -1));
  for (int bid = 0; bid < (int)rs.borders.size(); ++bid) {
    const Border& b = rs.borders[bid];
    if (local[b.i] < 0 || local[b.j] < 0) continue;
    border_ids.push_back(bid);
    at[local[b.i]][local[b.j]] = at[local[b.j]][local[b.i]] = bid;
  }
  require(!border_ids.empty(), Errc::AuditFailed, "component has no borders");

  // Try each border between cyclically adjacent regions as the root.
  std::string last_reason = "no border joins cyclically adjacent regions";
  for (int h = 0; h < kc; ++h) {
    int hn = (h + 1) % kc;
    if (kc == 2 && h == 1) break;  // {0,1} and {1,0} are the same candidate
    if (at[h][hn] < 0) continue;
    try {
      return attempt(rs, component, border_ids, hn);
    } catch (const Error& e) {
      if (e.code != Errc::AuditFailed) throw;
      last_reason = e.what();
    }
  }
  fail(Errc::AuditFailed, std::string("no usable root border: ") + last_reason);
}

}  // namespace kvdp
