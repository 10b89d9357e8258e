#include "disk3/catalog.hpp"

#include <bit>

namespace disk3 {

PlaneGraph fig1a() {
  RotationInput in;
  in.n = 6;
  in.rotation = {{1, 2, 5}, {2, 0}, {1, 3, 0}, {2, 4}, {5, 3}, {0, 4}};
  in.outer = {0, 1, 2, 3, 4, 5};
  return build(in);
}

PlaneGraph fig1b() {
  RotationInput in;
  in.n = 9;
  in.rotation = {
      {1, 6, 5},  // r1: r2, t1, r6
      {2, 0},     // r2
      {1, 3, 8},  // r3: r2, r4, t3
      {2, 4},     // r4
      {5, 7, 3},  // r5: r6, t2, r4
      {0, 4},     // r6
      {0, 8, 7},  // t1: r1, t3, t2
      {6, 8, 4},  // t2: t1, t3, r5
      {2, 7, 6},  // t3: r3, t2, t1
  };
  in.outer = {0, 1, 2, 3, 4, 5};
  return build(in);
}

bool quadrangulated_interior(const PlaneGraph& g) {
  for (size_t f = 0; f < g.faces.size(); ++f)
    if (static_cast<int>(f) != g.outer_face_id && g.faces[f].length() != 4) return false;
  return true;
}

bool pentagon_one_triangle_shape(const PlaneGraph& g) {
  if (g.outer_face().length() != 5 || !g.outer_face().is_simple_cycle()) return false;
  const std::vector<int>& walk = g.outer_face().verts;
  int triangle = -1;
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (static_cast<int>(f) == g.outer_face_id) continue;
    int len = g.faces[f].length();
    if (len == 3) {
      if (triangle >= 0) return false;
      triangle = static_cast<int>(f);
    } else if (len != 4) {
      return false;
    }
  }
  if (triangle < 0) return false;

  const std::vector<int>& tw = g.faces[triangle].verts;
  for (int i = 0; i < 3; ++i) {
    int u = tw[i], v = tw[(i + 1) % 3];
    for (int j = 0; j < 5; ++j) {
      int a = walk[j], b = walk[(j + 1) % 5];
      if (std::min(u, v) == std::min(a, b) && std::max(u, v) == std::max(a, b)) return true;
    }
  }
  return false;
}

BoundaryShape boundary_shape(const PlaneGraph& h) {
  if (int gi = girth(h); gi != 0 && gi < 5)
    throw Error(Err::GirthTooSmall, "girth " + std::to_string(gi) + " is below five");
  std::vector<int> cyc = h.outer_cycle();
  const int k = static_cast<int>(cyc.size());
  if (k > 11) throw Error(Err::OuterTooLong, "outer cycle length " + std::to_string(k));

  uint64_t outer = h.outer_mask();
  uint64_t core = ((h.n == 64 ? ~uint64_t{0} : (uint64_t{1} << h.n) - 1)) & ~outer;
  BoundaryShape none;

  if (!core) {
    // All vertices on the cycle; a chord makes it the chorded case.
    if (k < 8 || h.edges == k) return none;
    std::vector<uint64_t> on_cycle_edge(h.n, 0);
    for (int i = 0; i < k; ++i) {
      on_cycle_edge[cyc[i]] |= uint64_t{1} << cyc[(i + 1) % k];
      on_cycle_edge[cyc[(i + 1) % k]] |= uint64_t{1} << cyc[i];
    }
    for (int u = 0; u < h.n; ++u) {
      uint64_t ch = h.adj[u] & ~on_cycle_edge[u] & ~((uint64_t{2} << u) - 1);
      if (ch) {
        BoundaryShape s;
        s.kind = BoundaryShapeCase::Chorded;
        s.chord_u = u;
        s.chord_v = std::countr_zero(ch);
        return s;
      }
    }
    return none;
  }

  for (uint64_t m = core; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (h.degree(v) != 3) return none;
  }

  // Connectivity and cycle count of the subgraph induced on the core.
  int core_n = std::popcount(core);
  int core_edges = 0;
  for (uint64_t m = core; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    core_edges += std::popcount(h.adj[v] & core);
  }
  core_edges /= 2;
  int root = std::countr_zero(core);
  uint64_t seen = uint64_t{1} << root;
  std::vector<int> queue{root};
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    uint64_t fresh = h.adj[u] & core & ~seen;
    seen |= fresh;
    while (fresh) {
      queue.push_back(std::countr_zero(fresh));
      fresh &= fresh - 1;
    }
  }
  if (std::popcount(seen) != core_n) return none;

  std::vector<int> core_list;
  for (uint64_t m = core; m;) {
    core_list.push_back(std::countr_zero(m));
    m &= m - 1;
  }

  if (core_edges == core_n - 1) {
    if (k < 9 || core_n > k - 8) return none;
    BoundaryShape s;
    s.kind = BoundaryShapeCase::TreeCore;
    s.core = std::move(core_list);
    return s;
  }
  if (core_edges == core_n) {
    // Unicyclic: the unique cycle must be a 5-cycle.  Girth at least five and
    // one cycle means it suffices to find its length.
    if (k < 10 || core_n > k - 5) return none;
    // Strip leaves until only the cycle remains.
    uint64_t alive = core;
    bool changed = true;
    while (changed) {
      changed = false;
      for (uint64_t m = alive; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (std::popcount(h.adj[v] & alive) <= 1) {
          alive &= ~(uint64_t{1} << v);
          changed = true;
        }
      }
    }
    if (std::popcount(alive) != 5) return none;
    BoundaryShape s;
    s.kind = BoundaryShapeCase::UnicyclicCore;
    s.core = std::move(core_list);
    // Walk the surviving 5-cycle in adjacency order.
    int start = std::countr_zero(alive);
    int prev = -1, cur = start;
    do {
      s.core_cycle.push_back(cur);
      uint64_t nb = h.adj[cur] & alive;
      int nxt = -1;
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (w != prev) {
          nxt = w;
          break;
        }
      }
      prev = cur;
      cur = nxt;
    } while (cur != start && static_cast<int>(s.core_cycle.size()) <= h.n);
    return s;
  }
  return none;
}

}  // namespace disk3
