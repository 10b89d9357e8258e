#include "disk3/canonical.hpp"

#include <cassert>

namespace disk3 {

namespace {

// One encoding attempt: root the walk at position s, orientation dir (0 keeps
// rotations, 1 reverses them all).  Labels spread by breadth-first search where
// each vertex enumerates its rotation starting from the edge it was reached by,
// so labels are forced once the root edge is fixed.
struct Encoder {
  const PlaneGraph& g;
  int dir;
  std::vector<int> new_id, order, anchor;

  Encoder(const PlaneGraph& graph, int direction) : g(graph), dir(direction) {}

  int rot_at(int v, int i) const {
    const std::vector<int>& r = g.rotation[v];
    int d = static_cast<int>(r.size());
    return dir == 0 ? r[i % d] : r[(d - 1 - i % d + d) % d];
  }
  int rot_pos(int v, int w) const {
    int i = g.rotation_index(v, w);
    int d = g.degree(v);
    return dir == 0 ? i : d - 1 - i;
  }

  std::string run(int root, int root_anchor) {
    new_id.assign(g.n, -1);
    anchor.assign(g.n, -1);
    order.clear();
    new_id[root] = 0;
    anchor[root] = root_anchor;
    order.push_back(root);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int x = order[qi];
      int base = rot_pos(x, anchor[x]);
      for (int j = 0; j < g.degree(x); ++j) {
        int y = rot_at(x, base + j);
        if (new_id[y] < 0) {
          new_id[y] = static_cast<int>(order.size());
          anchor[y] = x;
          order.push_back(y);
        }
      }
    }
    assert(static_cast<int>(order.size()) == g.n);

    std::string code;
    code.reserve(2 + g.n + 2 * g.edges);
    code.push_back(static_cast<char>(g.n));
    code.push_back(static_cast<char>(g.outer_face().length()));
    for (int x : order) {
      int base = rot_pos(x, anchor[x]);
      code.push_back(static_cast<char>(g.degree(x)));
      for (int j = 0; j < g.degree(x); ++j)
        code.push_back(static_cast<char>(new_id[rot_at(x, base + j)]));
    }
    return code;
  }
};

}  // namespace

CanonForm canon(const PlaneGraph& g) {
  const std::vector<int>& walk = g.outer_face().verts;
  const int k = static_cast<int>(walk.size());
  CanonForm best;
  Encoder enc(g, 0);
  for (int dir = 0; dir < 2; ++dir) {
    enc.dir = dir;
    for (int s = 0; s < k; ++s) {
      int root = walk[s];
      int anchor = dir == 0 ? walk[(s + 1) % k] : walk[(s - 1 + k) % k];
      std::string code = enc.run(root, anchor);
      if (best.code.empty() || code < best.code) {
        best.code = code;
        best.labelings.clear();
        best.labelings.push_back(enc.new_id);
      } else if (code == best.code) {
        best.labelings.push_back(enc.new_id);
      }
    }
  }
  return best;
}

bool rooted_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.n != b.n || a.edges != b.edges) return false;
  return canon(a).code == canon(b).code;
}

std::vector<std::vector<int>> rooted_automorphisms(const PlaneGraph& g) {
  CanonForm cf = canon(g);
  std::vector<int> inv0(g.n);
  for (int v = 0; v < g.n; ++v) inv0[cf.labelings[0][v]] = v;
  std::vector<std::vector<int>> perms;
  perms.reserve(cf.labelings.size());
  for (const std::vector<int>& lab : cf.labelings) {
    std::vector<int> p(g.n);
    for (int v = 0; v < g.n; ++v) p[v] = inv0[lab[v]];
    perms.push_back(std::move(p));
  }
  return perms;
}

}  // namespace disk3
