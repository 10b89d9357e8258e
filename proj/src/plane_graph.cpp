#include "disk3/plane_graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <sstream>

namespace disk3 {

namespace {

// Lexicographically smallest rotation of seq or of its reverse.  Identifies a
// cyclic sequence up to rotation and reflection.
std::vector<int> normalize_cyclic(const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  std::vector<int> best, cand(k);
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < k; ++s) {
      for (int i = 0; i < k; ++i) {
        int idx = dir == 0 ? (s + i) % k : (s - i % k + k) % k;
        cand[i] = seq[idx];
      }
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace

uint64_t FacialWalk::vertex_mask() const {
  uint64_t m = 0;
  for (int v : verts) m |= uint64_t{1} << v;
  return m;
}

bool FacialWalk::is_simple_cycle() const {
  if (verts.size() < 3) return false;
  return std::popcount(vertex_mask()) == static_cast<int>(verts.size());
}

uint64_t CycleRef::vertex_mask() const {
  uint64_t m = 0;
  for (int v : verts) m |= uint64_t{1} << v;
  return m;
}

bool CycleRef::operator<(const CycleRef& o) const {
  if (verts.size() != o.verts.size()) return verts.size() < o.verts.size();
  return verts < o.verts;
}

CycleRef canon_cycle(const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  assert(k >= 3);
  int pos = 0;
  for (int i = 1; i < k; ++i)
    if (verts[i] < verts[pos]) pos = i;
  std::vector<int> out(k);
  int next = verts[(pos + 1) % k], prev = verts[(pos - 1 + k) % k];
  int step = next < prev ? 1 : -1;
  for (int i = 0; i < k; ++i) out[i] = verts[((pos + step * i) % k + k) % k];
  return CycleRef{std::move(out)};
}

int PlaneGraph::rotation_index(int u, int v) const { return nbr_index_[u * n + v]; }

int PlaneGraph::face_at(int u, int v) const {
  int i = rotation_index(u, v);
  assert(i >= 0);
  return face_of_edge_[u * n + i];
}

std::vector<int> PlaneGraph::outer_cycle() const {
  const FacialWalk& w = outer_face();
  if (!w.is_simple_cycle())
    throw Error(Err::OuterNotCycle, "outer face is not a simple cycle");
  return w.verts;
}

PlaneGraph build(const RotationInput& in) {
  if (in.n < 1 || in.n > max_vertices_supported)
    throw Error(Err::NonSimple, "vertex count out of range: " + std::to_string(in.n));
  if (static_cast<int>(in.rotation.size()) != in.n)
    throw Error(Err::NonSimple, "rotation table size does not match vertex count");

  PlaneGraph g;
  g.n = in.n;
  g.rotation = in.rotation;
  g.adj.assign(g.n, 0);
  g.nbr_index_.assign(g.n * g.n, -1);

  int half_edges = 0;
  for (int u = 0; u < g.n; ++u) {
    for (size_t i = 0; i < g.rotation[u].size(); ++i) {
      int v = g.rotation[u][i];
      if (v < 0 || v >= g.n)
        throw Error(Err::NonSimple, "neighbor id out of range at vertex " + std::to_string(u + 1));
      if (v == u)
        throw Error(Err::NonSimple, "loop at vertex " + std::to_string(u + 1));
      if (g.nbr_index_[u * g.n + v] != -1)
        throw Error(Err::NonSimple, "repeated neighbor at vertex " + std::to_string(u + 1));
      g.nbr_index_[u * g.n + v] = static_cast<int8_t>(i);
      g.adj[u] |= uint64_t{1} << v;
      ++half_edges;
    }
  }
  for (int u = 0; u < g.n; ++u)
    for (int v : g.rotation[u])
      if (!g.has_edge(v, u))
        throw Error(Err::NonSimple, "edge " + std::to_string(u + 1) + "-" +
                                        std::to_string(v + 1) + " missing its reverse");
  g.edges = half_edges / 2;

  uint64_t seen = 1;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    uint64_t fresh = g.adj[u] & ~seen;
    seen |= fresh;
    while (fresh) {
      int v = std::countr_zero(fresh);
      fresh &= fresh - 1;
      queue.push_back(v);
    }
  }
  if (std::popcount(seen) != g.n)
    throw Error(Err::Disconnected, "graph is not connected");

  // Face tracing: the directed edge after (u, v) is (v, w) with w the cyclic
  // successor of u in rotation[v].  Scanning directed edges in lexicographic
  // order makes each stored walk start at its minimal directed edge.
  g.face_of_edge_.assign(half_edges == 0 ? 0 : g.n * g.n, -1);
  std::vector<char> traced(g.n * g.n, 0);
  for (int u0 = 0; u0 < g.n; ++u0) {
    for (int v0 = 0; v0 < g.n; ++v0) {
      if (!g.has_edge(u0, v0) || traced[u0 * g.n + v0]) continue;
      FacialWalk walk;
      int face_id = static_cast<int>(g.faces.size());
      int a = u0, b = v0;
      do {
        traced[a * g.n + b] = 1;
        g.face_of_edge_[a * g.n + g.rotation_index(a, b)] = face_id;
        walk.verts.push_back(a);
        const std::vector<int>& rot = g.rotation[b];
        int i = g.rotation_index(b, a);
        int w = rot[(i + 1) % rot.size()];
        a = b;
        b = w;
      } while (!(a == u0 && b == v0));
      g.faces.push_back(std::move(walk));
    }
  }

  int euler = g.n - g.edges + static_cast<int>(g.faces.size());
  if (euler != 2)
    throw Error(Err::NonPlanarRotation,
                "rotation system is not planar: V-E+F = " + std::to_string(euler));

  if (in.outer.empty())
    throw Error(Err::OuterFaceNotFound, "no outer face specified");
  std::vector<int> want = normalize_cyclic(in.outer);
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (g.faces[f].verts.size() != want.size()) continue;
    if (normalize_cyclic(g.faces[f].verts) == want) {
      g.outer_face_id = static_cast<int>(f);
      break;
    }
  }
  if (g.outer_face_id < 0)
    throw Error(Err::OuterFaceNotFound, "specified outer walk is not a face");
  return g;
}

PlaneGraph mirrored(const PlaneGraph& g) {
  RotationInput in;
  in.n = g.n;
  in.rotation = g.rotation;
  for (auto& r : in.rotation) std::reverse(r.begin(), r.end());
  in.outer = g.outer_face().verts;
  return build(in);
}

namespace {

int parse_vertex_id(const std::string& tok, int n, int line_no) {
  size_t used = 0;
  int v;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": bad id '" + tok + "'");
  }
  if (used != tok.size() || v < 1 || (n > 0 && v > n))
    throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": bad id '" + tok + "'");
  return v - 1;
}

}  // namespace

PlaneGraph parse_rotg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  RotationInput ri;
  std::vector<char> have_rot;
  bool have_vertices = false, have_outer = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;

    if (head == "vertices") {
      if (have_vertices)
        throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": repeated vertices line");
      if (!(ls >> ri.n) || ri.n < 1 || ri.n > max_vertices_supported)
        throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": bad vertex count");
      std::string rest;
      if (ls >> rest)
        throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": trailing tokens");
      have_vertices = true;
      ri.rotation.assign(ri.n, {});
      have_rot.assign(ri.n, 0);
      continue;
    }
    if (!have_vertices)
      throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": expected vertices line first");

    if (head == "rot") {
      std::string vtok;
      if (!(ls >> vtok) || vtok.empty() || vtok.back() != ':')
        throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": expected 'rot v:'");
      vtok.pop_back();
      int v = parse_vertex_id(vtok, ri.n, line_no);
      if (have_rot[v])
        throw Error(Err::ParseError,
                    "line " + std::to_string(line_no) + ": repeated rotation for vertex " + vtok);
      have_rot[v] = 1;
      std::string tok;
      while (ls >> tok) ri.rotation[v].push_back(parse_vertex_id(tok, ri.n, line_no));
    } else if (head == "outer:") {
      if (have_outer)
        throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": repeated outer line");
      have_outer = true;
      std::string tok;
      while (ls >> tok) ri.outer.push_back(parse_vertex_id(tok, ri.n, line_no));
      if (ri.outer.empty())
        throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": empty outer walk");
    } else {
      throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": unknown directive '" + head + "'");
    }
  }
  if (!have_vertices) throw Error(Err::ParseError, "missing vertices line");
  for (int v = 0; v < ri.n; ++v)
    if (!have_rot[v])
      throw Error(Err::ParseError, "missing rotation for vertex " + std::to_string(v + 1));
  if (!have_outer) throw Error(Err::ParseError, "missing outer line");
  return build(ri);
}

PlaneGraph load_rotg(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Err::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_rotg(buf.str());
}

std::string to_rotg(const PlaneGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.n << "\n";
  for (int v = 0; v < g.n; ++v) {
    out << "rot " << v + 1 << ":";
    const std::vector<int>& rot = g.rotation[v];
    size_t start = 0;
    for (size_t i = 1; i < rot.size(); ++i)
      if (rot[i] < rot[start]) start = i;
    for (size_t i = 0; i < rot.size(); ++i) out << " " << rot[(start + i) % rot.size()] + 1;
    out << "\n";
  }
  out << "outer:";
  for (int v : g.outer_face().verts) out << " " << v + 1;
  out << "\n";
  return out.str();
}

namespace {

void cycle_dfs(const PlaneGraph& g, int s, int u, uint64_t on_path, std::vector<int>& path,
               int max_len, std::vector<CycleRef>& out) {
  uint64_t cand = g.adj[u];
  while (cand) {
    int w = std::countr_zero(cand);
    cand &= cand - 1;
    if (w == s && path.size() >= 3 && path[1] < path.back()) {
      out.push_back(canon_cycle(path));
    } else if (w > s && !((on_path >> w) & 1) && static_cast<int>(path.size()) < max_len) {
      path.push_back(w);
      cycle_dfs(g, s, w, on_path | (uint64_t{1} << w), path, max_len, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<CycleRef> cycles_up_to(const PlaneGraph& g, int max_len) {
  std::vector<CycleRef> out;
  if (max_len < 3) return out;
  std::vector<int> path;
  for (int s = 0; s < g.n; ++s) {
    path.assign(1, s);
    cycle_dfs(g, s, s, uint64_t{1} << s, path, max_len, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int girth(const PlaneGraph& g) {
  int best = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.rotation[u]) {
      if (v < u) continue;
      // Shortest u-v path avoiding the edge uv, via BFS.
      std::vector<int> dist(g.n, -1);
      std::vector<int> queue{u};
      dist[u] = 0;
      for (size_t qi = 0; qi < queue.size() && dist[v] < 0; ++qi) {
        int x = queue[qi];
        uint64_t cand = g.adj[x];
        while (cand) {
          int y = std::countr_zero(cand);
          cand &= cand - 1;
          if ((x == u && y == v) || (x == v && y == u) || dist[y] >= 0) continue;
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
      if (dist[v] >= 0 && (best == 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
  }
  return best;
}

namespace {

void check_is_cycle(const PlaneGraph& g, const CycleRef& c) {
  const int k = c.length();
  if (k < 3 || std::popcount(c.vertex_mask()) != k)
    throw Error(Err::CycleNotFound, "not a simple cycle");
  for (int i = 0; i < k; ++i) {
    int u = c.verts[i], v = c.verts[(i + 1) % k];
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
      throw Error(Err::CycleNotFound, "cycle edge missing from graph");
  }
}

}  // namespace

uint64_t faces_inside(const PlaneGraph& g, const CycleRef& c) {
  check_is_cycle(g, c);
  const int k = c.length();
  assert(g.faces.size() <= 64);

  std::vector<uint64_t> on_cycle(g.n, 0);
  for (int i = 0; i < k; ++i) {
    int u = c.verts[i], v = c.verts[(i + 1) % k];
    on_cycle[u] |= uint64_t{1} << v;
    on_cycle[v] |= uint64_t{1} << u;
  }

  uint64_t reached = uint64_t{1} << g.outer_face_id;
  std::vector<int> queue{g.outer_face_id};
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < g.faces[f].verts.size(); ++i) {
      int u = g.faces[f].verts[i];
      int v = g.faces[f].verts[(i + 1) % g.faces[f].verts.size()];
      if ((on_cycle[u] >> v) & 1) continue;
      int other = g.face_at(v, u);
      if (!((reached >> other) & 1)) {
        reached |= uint64_t{1} << other;
        queue.push_back(other);
      }
    }
  }
  uint64_t all = g.faces.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.faces.size()) - 1;
  return all & ~reached;
}

InteriorSubgraph interior_subgraph(const PlaneGraph& g, const CycleRef& c) {
  uint64_t inside = faces_inside(g, c);
  uint64_t cyc_mask = c.vertex_mask();
  const int k = c.length();

  std::vector<uint64_t> keep_edge(g.n, 0);
  for (int i = 0; i < k; ++i) {
    int u = c.verts[i], v = c.verts[(i + 1) % k];
    keep_edge[u] |= uint64_t{1} << v;
    keep_edge[v] |= uint64_t{1} << u;
  }
  uint64_t keep_vert = cyc_mask;
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.rotation[u]) {
      if (v < u) continue;
      bool in1 = (inside >> g.face_at(u, v)) & 1;
      bool in2 = (inside >> g.face_at(v, u)) & 1;
      if (in1 && in2) {
        keep_edge[u] |= uint64_t{1} << v;
        keep_edge[v] |= uint64_t{1} << u;
        keep_vert |= (uint64_t{1} << u) | (uint64_t{1} << v);
      }
    }
  }

  InteriorSubgraph out;
  std::vector<int> new_id(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if ((keep_vert >> v) & 1) {
      new_id[v] = static_cast<int>(out.orig_vertex.size());
      out.orig_vertex.push_back(v);
    }
  }

  RotationInput ri;
  ri.n = static_cast<int>(out.orig_vertex.size());
  ri.rotation.resize(ri.n);
  for (int v : out.orig_vertex)
    for (int w : g.rotation[v])
      if ((keep_edge[v] >> w) & 1) ri.rotation[new_id[v]].push_back(new_id[w]);
  for (int v : c.verts) ri.outer.push_back(new_id[v]);
  out.graph = build(ri);
  return out;
}

int subgraph_distance(const PlaneGraph& g, const std::vector<int>& xs,
                      const std::vector<int>& ys) {
  uint64_t target = 0;
  for (int v : ys) target |= uint64_t{1} << v;
  std::vector<int> dist(g.n, -1);
  std::vector<int> queue;
  for (int v : xs) {
    if (dist[v] < 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    if ((target >> u) & 1) return dist[u];
    uint64_t cand = g.adj[u];
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return inf_distance;
}

}  // namespace disk3
