#include "disk3/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <numeric>

#include "disk3/canonical.hpp"

namespace disk3 {

void validate_constraints(const GenConstraints& c) {
  if (c.outer_len < 3 || c.outer_len > 6)
    throw Error(Err::BadConstraints, "outer_len must be 3..6");
  if (c.max_vertices < c.outer_len || c.max_vertices > 20)
    throw Error(Err::BadConstraints, "max_vertices must be outer_len..20");
  if (c.max_triangles < 0 || c.max_triangles > 1)
    throw Error(Err::BadConstraints, "max_triangles must be 0 or 1");
  if (c.min_other_cycle < 4 || c.min_other_cycle > 9)
    throw Error(Err::BadConstraints, "min_other_cycle must be 4..9");
  if (!c.require_2connected)
    throw Error(Err::BadConstraints,
                "require_2connected=false is unsupported: generation is rooted at the outer "
                "cycle and inherently 2-connected");
}

namespace {

PlaneGraph make_seed(int k) {
  RotationInput in;
  in.n = k;
  in.rotation.resize(k);
  for (int i = 0; i < k; ++i) in.rotation[i] = {(i + 1) % k, (i + k - 1) % k};
  in.outer.resize(k);
  std::iota(in.outer.begin(), in.outer.end(), 0);
  return build(in);
}

struct Move {
  int face;
  int u, v;  // u < v, both on the face
  int len;   // edges in the inserted path
  int tri_new;
};

// Counts of simple u-v paths by edge count, up to `limit` edges.  Every cycle
// created by an inserted ear is the ear plus one such path, so these counts
// decide the cycle constraints for a candidate move before it is built.
using PathCounts = std::array<int, 10>;

void count_paths(const PlaneGraph& g, int cur, int target, uint64_t visited, int depth, int limit,
                 PathCounts& pc) {
  uint64_t nb = g.adj[cur];
  while (nb) {
    int w = std::countr_zero(nb);
    nb &= nb - 1;
    if (w == target) {
      ++pc[depth + 1];
      continue;
    }
    if (depth + 1 < limit && !((visited >> w) & 1))
      count_paths(g, w, target, visited | (uint64_t{1} << w), depth + 1, limit, pc);
  }
}

// tri_new on success, -1 when the move creates a forbidden short cycle or
// exceeds the triangle budget.
int eval_move(const PathCounts& pc, int len, const GenConstraints& c, int tri_used) {
  int tri_new = 0;
  for (int p = 1; p < static_cast<int>(pc.size()); ++p) {
    if (pc[p] == 0) continue;
    int cyc = p + len;
    if (cyc == 3)
      tri_new += pc[p];
    else if (cyc < c.min_other_cycle)
      return -1;
  }
  if (tri_used + tri_new > c.max_triangles) return -1;
  return tri_new;
}

std::string pack(const std::vector<int>& v) {
  std::string s;
  s.reserve(v.size());
  for (int x : v) s.push_back(static_cast<char>(x));
  return s;
}

// Smallest rotation of seq or its reverse, as a packed string.
std::string cyclic_id(const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  std::vector<int> best, cand(k);
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < k; ++s) {
      for (int i = 0; i < k; ++i) cand[i] = seq[dir == 0 ? (s + i) % k : (s - i + k) % k];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return pack(best);
}

struct Applied {
  PlaneGraph g;
  std::vector<int> chain;  // u, new vertices, v
};

Applied apply_move(const PlaneGraph& g, const Move& m) {
  const std::vector<int>& walk = g.faces[m.face].verts;
  const int kf = static_cast<int>(walk.size());
  int iu = -1, iv = -1;
  for (int i = 0; i < kf; ++i) {
    if (walk[i] == m.u) iu = i;
    if (walk[i] == m.v) iv = i;
  }
  assert(iu >= 0 && iv >= 0);
  int p = walk[(iu + kf - 1) % kf];
  int q = walk[(iv + kf - 1) % kf];

  std::vector<int> chain;
  chain.push_back(m.u);
  for (int i = 1; i < m.len; ++i) chain.push_back(g.n + i - 1);
  chain.push_back(m.v);

  RotationInput in;
  in.n = g.n + m.len - 1;
  in.rotation = g.rotation;
  in.rotation.resize(in.n);
  auto insert_after = [](std::vector<int>& rot, int after, int x) {
    auto it = std::find(rot.begin(), rot.end(), after);
    assert(it != rot.end());
    rot.insert(it + 1, x);
  };
  // The new faces both trace correctly when each endpoint's new neighbor sits
  // right after the endpoint's predecessor on the old face walk.
  insert_after(in.rotation[m.u], p, chain[1]);
  insert_after(in.rotation[m.v], q, chain[chain.size() - 2]);
  for (int i = 1; i < m.len; ++i) in.rotation[g.n + i - 1] = {chain[i - 1], chain[i + 1]};
  in.outer = g.outer_face().verts;

  Applied ap{build(in), std::move(chain)};
  assert(ap.g.faces.size() == g.faces.size() + 1);
  return ap;
}

// Ears whose removal stays inside the family: paths whose internal vertices
// all have degree two and sit off the outer cycle, whose endpoints have degree
// at least three, whose edges are off the outer cycle, and whose two flanking
// faces meet exactly in the ear (so the merged face is again a simple cycle).
std::vector<std::vector<int>> removable_ears(const PlaneGraph& g) {
  uint64_t outer = g.outer_mask();
  std::vector<uint64_t> outer_edge(g.n, 0);
  {
    const std::vector<int>& w = g.outer_face().verts;
    for (size_t i = 0; i < w.size(); ++i) {
      int a = w[i], b = w[(i + 1) % w.size()];
      outer_edge[a] |= uint64_t{1} << b;
      outer_edge[b] |= uint64_t{1} << a;
    }
  }
  auto chain_vertex = [&](int v) { return g.degree(v) == 2 && !((outer >> v) & 1); };

  std::vector<std::vector<int>> ears;
  std::vector<char> used(g.n, 0);
  for (int w = 0; w < g.n; ++w) {
    if (!chain_vertex(w) || used[w]) continue;
    used[w] = 1;
    std::vector<int> seq{w};
    for (int side = 0; side < 2; ++side) {
      int prev = w, cur = g.rotation[w][side];
      while (chain_vertex(cur)) {
        used[cur] = 1;
        if (side == 0)
          seq.insert(seq.begin(), cur);
        else
          seq.push_back(cur);
        int nxt = g.rotation[cur][0] == prev ? g.rotation[cur][1] : g.rotation[cur][0];
        prev = cur;
        cur = nxt;
      }
      if (side == 0)
        seq.insert(seq.begin(), cur);
      else
        seq.push_back(cur);
    }
    assert(seq.front() != seq.back());
    if (g.degree(seq.front()) >= 3 && g.degree(seq.back()) >= 3) ears.push_back(std::move(seq));
  }
  for (int a = 0; a < g.n; ++a) {
    uint64_t nb = g.adj[a] & ~outer_edge[a] & ~((uint64_t{2} << a) - 1);
    while (nb) {
      int b = std::countr_zero(nb);
      nb &= nb - 1;
      if (g.degree(a) >= 3 && g.degree(b) >= 3 && !chain_vertex(a) && !chain_vertex(b))
        ears.push_back({a, b});
    }
  }

  std::vector<std::vector<int>> out;
  for (std::vector<int>& e : ears) {
    int f1 = g.face_at(e[0], e[1]);
    int f2 = g.face_at(e[1], e[0]);
    uint64_t em = 0;
    for (int v : e) em |= uint64_t{1} << v;
    if ((g.faces[f1].vertex_mask() & g.faces[f2].vertex_mask()) == em) out.push_back(std::move(e));
  }
  return out;
}

std::string ear_key(const std::vector<int>& chain, const std::vector<std::vector<int>>& labs) {
  std::string best;
  std::vector<int> tmp(chain.size());
  for (const std::vector<int>& lab : labs) {
    for (size_t i = 0; i < chain.size(); ++i) tmp[i] = lab[chain[i]];
    std::string fwd = pack(tmp);
    std::reverse(tmp.begin(), tmp.end());
    std::string bwd = pack(tmp);
    if (best.empty() || fwd < best) best = fwd;
    if (bwd < best) best = bwd;
  }
  return best;
}

// The child survives exactly when the ear just inserted is the canonical
// removable ear, so each graph is kept on one construction path only.
bool ccp_accept(const PlaneGraph& child, const std::vector<int>& inserted) {
  CanonForm cf = canon(child);
  std::vector<std::vector<int>> ears = removable_ears(child);
  bool present = false;
  for (const std::vector<int>& e : ears) {
    if (e == inserted) present = true;
    std::vector<int> rev(e.rbegin(), e.rend());
    if (rev == inserted) present = true;
  }
  assert(present);
  std::string mine = ear_key(inserted, cf.labelings);
  for (const std::vector<int>& e : ears)
    if (ear_key(e, cf.labelings) < mine) return false;
  return true;
}

// Triangle count under the constraints, or -1 on a forbidden short cycle.
// This full recount is the authoritative gate; eval_move only prefilters.
int recount_triangles(const PlaneGraph& g, const GenConstraints& c, const CycleRef& outer_ref) {
  int tri = 0;
  for (const CycleRef& cyc : cycles_up_to(g, std::max(3, c.min_other_cycle - 1))) {
    if (cyc == outer_ref) continue;
    if (cyc.length() != 3) return -1;
    ++tri;
  }
  return tri <= c.max_triangles ? tri : -1;
}

// Accepted children of g in deterministic order, with their triangle counts.
void expand(const PlaneGraph& g, int tri, const GenConstraints& c, const CycleRef& outer_ref,
            const std::function<void(const PlaneGraph&, int)>& visit) {
  std::vector<std::vector<int>> perms = rooted_automorphisms(g);
  const int nperm = static_cast<int>(perms.size());

  // Identity of each inner face image under each automorphism, for orbit keys.
  std::vector<std::vector<std::string>> face_id(g.faces.size());
  std::vector<int> tmp;
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (static_cast<int>(f) == g.outer_face_id) continue;
    face_id[f].resize(nperm);
    for (int pi = 0; pi < nperm; ++pi) {
      tmp.resize(g.faces[f].verts.size());
      for (size_t i = 0; i < tmp.size(); ++i) tmp[i] = perms[pi][g.faces[f].verts[i]];
      face_id[f][pi] = cyclic_id(tmp);
    }
  }

  const int limit_p = std::max(3, c.min_other_cycle - 1) - 1;
  const int max_len = c.max_vertices - g.n + 1;
  std::vector<Move> moves;
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (static_cast<int>(f) == g.outer_face_id) continue;
    const std::vector<int>& walk = g.faces[f].verts;
    const int kf = static_cast<int>(walk.size());
    for (int i = 0; i < kf; ++i) {
      for (int j = i + 1; j < kf; ++j) {
        int u = std::min(walk[i], walk[j]), v = std::max(walk[i], walk[j]);
        // One move per automorphism orbit: keep (face, pair) only when its key
        // is minimal among its images.
        bool canonical_pair = true;
        for (int pi = 1; pi < nperm && canonical_pair; ++pi) {
          int pu = perms[pi][u], pv = perms[pi][v];
          if (pu > pv) std::swap(pu, pv);
          auto cmp = face_id[f][pi].compare(face_id[f][0]);
          if (cmp < 0 || (cmp == 0 && std::make_pair(pu, pv) < std::make_pair(u, v)))
            canonical_pair = false;
        }
        if (!canonical_pair) continue;

        PathCounts pc{};
        count_paths(g, u, v, uint64_t{1} << u, 0, limit_p, pc);
        for (int len = 1; len <= max_len; ++len) {
          if (len == 1 && g.has_edge(u, v)) continue;
          int tn = eval_move(pc, len, c, tri);
          if (tn >= 0) moves.push_back({static_cast<int>(f), u, v, len, tn});
        }
      }
    }
  }
  std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    return std::tie(a.face, a.u, a.v, a.len) < std::tie(b.face, b.u, b.v, b.len);
  });

  for (const Move& m : moves) {
    Applied ap = apply_move(g, m);
    int ctri = recount_triangles(ap.g, c, outer_ref);
    assert(ctri == tri + m.tri_new);
    if (ctri < 0) continue;
    if (ccp_accept(ap.g, ap.chain)) visit(ap.g, ctri);
  }
}

void dfs(const PlaneGraph& g, int tri, const GenConstraints& c, const CycleRef& outer_ref,
         const std::function<void(const PlaneGraph&)>& sink) {
  sink(g);
  expand(g, tri, c, outer_ref,
         [&](const PlaneGraph& child, int ctri) { dfs(child, ctri, c, outer_ref, sink); });
}

}  // namespace

void enumerate_graphs(const GenConstraints& c,
                      const std::function<void(const PlaneGraph&)>& sink) {
  validate_constraints(c);
  PlaneGraph seed = make_seed(c.outer_len);
  CycleRef outer_ref = canon_cycle(seed.outer_cycle());
  dfs(seed, 0, c, outer_ref, sink);
}

std::vector<PlaneGraph> enumerate_all(const GenConstraints& c) {
  std::vector<PlaneGraph> out;
  enumerate_graphs(c, [&](const PlaneGraph& g) { out.push_back(g); });
  return out;
}

EnumRoots enumeration_roots(const GenConstraints& c) {
  validate_constraints(c);
  EnumRoots r{make_seed(c.outer_len), {}};
  CycleRef outer_ref = canon_cycle(r.seed.outer_cycle());
  expand(r.seed, 0, c, outer_ref,
         [&](const PlaneGraph& child, int) { r.roots.push_back(child); });
  return r;
}

void enumerate_subtree(const GenConstraints& c, const PlaneGraph& root,
                       const std::function<void(const PlaneGraph&)>& sink) {
  validate_constraints(c);
  CycleRef outer_ref = canon_cycle(root.outer_cycle());
  int tri = recount_triangles(root, c, outer_ref);
  assert(tri >= 0);
  dfs(root, tri, c, outer_ref, sink);
}

std::vector<PlaneGraph> find_critical(const GenConstraints& c) {
  std::vector<PlaneGraph> out;
  enumerate_graphs(c, [&](const PlaneGraph& g) {
    if (criticality(g).is_critical) out.push_back(g);
  });
  return out;
}

CriticalityClaims check_criticality_claims(const PlaneGraph& g) {
  CriticalityClaims claims;
  uint64_t outer = g.outer_mask();
  for (int v = 0; v < g.n; ++v) {
    if ((outer >> v) & 1) continue;
    if (g.degree(v) < 3) claims.internal_low_degree.push_back(v);
    if (std::popcount(g.adj[v] & outer) >= 2) claims.internal_multi_attach.push_back(v);
  }

  std::vector<CycleRef> facial;
  for (const FacialWalk& f : g.faces)
    if (f.is_simple_cycle()) facial.push_back(canon_cycle(f.verts));

  for (const CycleRef& c : cycles_up_to(g, g.n)) {
    bool bounds_face = false;
    for (const CycleRef& fc : facial)
      if (fc == c) bounds_face = true;
    if (bounds_face) continue;
    InteriorSubgraph ins = interior_subgraph(g, c);
    if (!criticality(ins.graph).is_critical) claims.bad_interiors.push_back(c);
  }
  return claims;
}

}  // namespace disk3
