#include "disk3/decider.hpp"

#include <algorithm>
#include <bit>

#include "disk3/canonical.hpp"
#include "disk3/catalog.hpp"

namespace disk3 {

ClassReport validate_class(const PlaneGraph& g) {
  ClassReport rep;
  CycleRef outer = canon_cycle(g.outer_cycle());
  rep.outer_len = outer.length();

  std::vector<CycleRef> others;
  for (CycleRef& c : cycles_up_to(g, 4)) {
    if (!(c == outer)) others.push_back(c);
    if (c.length() == 3)
      rep.triangles.push_back(c);
    else
      rep.short_cycles.push_back(std::move(c));
  }
  rep.in_class = rep.outer_len <= 6 && others.size() <= 1 &&
                 (others.empty() || others[0].length() == 3);
  if (rep.in_class && !others.empty()) rep.designated_triangle = others[0];
  return rep;
}

std::optional<int> find_core_face(const PlaneGraph& g) {
  uint64_t all = g.faces.size() >= 64 ? ~uint64_t{0} : (uint64_t{1} << g.faces.size()) - 1;
  uint64_t ok = all;
  for (const CycleRef& c : cycles_up_to(g, 4)) {
    ok &= faces_inside(g, c);
    if (!ok) return std::nullopt;
  }
  return std::countr_zero(ok);
}

namespace {

void check_phi_domain(const PlaneGraph& g, const Precoloring& phi, uint64_t outer) {
  if (static_cast<int>(phi.size()) != g.n)
    throw Error(Err::DomainMismatch, "precoloring size does not match vertex count");
  for (int v = 0; v < g.n; ++v) {
    bool on_outer = (outer >> v) & 1;
    if (on_outer && (phi[v] < 1 || phi[v] > 3))
      throw Error(Err::IncompletePrecoloring,
                  "outer vertex " + std::to_string(v + 1) + " not colored");
    if (!on_outer && phi[v] != 0)
      throw Error(Err::DomainMismatch,
                  "vertex " + std::to_string(v + 1) + " outside the outer cycle is colored");
  }
}

}  // namespace

ExtensionDecision decide_extension(const PlaneGraph& g, const Precoloring& phi,
                                   const ClassReport& cls) {
  if (!cls.in_class) throw Error(Err::NotInClass, "graph is outside the decidable class");
  const std::vector<int>& walk = g.outer_face().verts;
  const int k = static_cast<int>(walk.size());
  uint64_t outer = g.outer_mask();
  check_phi_domain(g, phi, outer);

  ExtensionDecision d;
  for (int i = 0; i < k; ++i) {
    int u = walk[i], v = walk[(i + 1) % k];
    if (phi[u] == phi[v]) {
      d.variant = ExtensionDecision::Variant::FailsA;
      d.edge_u = std::min(u, v);
      d.edge_v = std::max(u, v);
      return d;
    }
  }
  if (k < 6) return d;

  for (int u = 0; u < g.n; ++u) {
    if (!((outer >> u) & 1)) continue;
    uint64_t nb = g.adj[u] & outer & ~((uint64_t{2} << u) - 1);
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (phi[u] == phi[v]) {
        d.variant = ExtensionDecision::Variant::FailsA;
        d.edge_u = u;
        d.edge_v = v;
        return d;
      }
    }
  }

  if (cls.designated_triangle && !(cls.designated_triangle->vertex_mask() & outer)) {
    std::vector<int> tri = cls.designated_triangle->verts;
    std::sort(tri.begin(), tri.end());
    for (int color = 1; color <= 3; ++color) {
      // Three vertex-disjoint edges from distinct outer vertices of this color
      // onto the triangle: backtrack over the triangle vertices in id order,
      // candidates ascending.
      std::array<std::vector<int>, 3> cand;
      for (int i = 0; i < 3; ++i) {
        uint64_t nb = g.adj[tri[i]] & outer;
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          if (phi[u] == color) cand[i].push_back(u);
        }
      }
      std::array<int, 3> pick{{-1, -1, -1}};
      uint64_t used = 0;
      int i = 0;
      std::array<size_t, 3> at{{0, 0, 0}};
      while (i >= 0) {
        if (i == 3) break;
        bool advanced = false;
        while (at[i] < cand[i].size()) {
          int u = cand[i][at[i]++];
          if ((used >> u) & 1) continue;
          pick[i] = u;
          used |= uint64_t{1} << u;
          ++i;
          if (i < 3) at[i] = 0;
          advanced = true;
          break;
        }
        if (!advanced) {
          at[i] = 0;
          --i;
          if (i >= 0) used &= ~(uint64_t{1} << pick[i]);
        }
      }
      if (i == 3) {
        std::array<std::pair<int, int>, 3> pairs;
        for (int j = 0; j < 3; ++j) pairs[j] = {pick[j], tri[j]};
        std::sort(pairs.begin(), pairs.end());
        d.variant = ExtensionDecision::Variant::FailsB;
        d.color = color;
        for (int j = 0; j < 3; ++j) {
          d.cycle_verts[j] = pairs[j].first;
          d.triangle_verts[j] = pairs[j].second;
        }
        return d;
      }
    }
  }
  return d;
}

ExtensionDecision decide_extension(const PlaneGraph& g, const Precoloring& phi) {
  return decide_extension(g, phi, validate_class(g));
}

bool weak_triangle_block(const PlaneGraph& g, const ClassReport& cls, const Precoloring& phi,
                         int color) {
  if (!cls.designated_triangle) return false;
  uint64_t outer = g.outer_mask();
  if (cls.designated_triangle->vertex_mask() & outer) return false;
  for (int t : cls.designated_triangle->verts) {
    bool hit = false;
    uint64_t nb = g.adj[t] & outer;
    while (nb && !hit) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      hit = phi[u] == color;
    }
    if (!hit) return false;
  }
  return true;
}

std::string decision_line(const ExtensionDecision& d) {
  using V = ExtensionDecision::Variant;
  if (d.variant == V::Extends) return "extends";
  if (d.variant == V::FailsA)
    return "fails_a " + std::to_string(d.edge_u + 1) + " " + std::to_string(d.edge_v + 1);
  std::string s = "fails_b " + std::to_string(d.color);
  for (int u : d.cycle_verts) s += " " + std::to_string(u + 1);
  for (int t : d.triangle_verts) s += " " + std::to_string(t + 1);
  return s;
}

CatalogMatch classify_critical(const PlaneGraph& g) {
  static const std::string code_a = canon(fig1a()).code;
  static const std::string code_b = canon(fig1b()).code;
  std::string code = canon(g).code;
  if (code == code_a) return CatalogMatch::Fig1a;
  if (code == code_b) return CatalogMatch::Fig1b;
  return CatalogMatch::Other;
}

}  // namespace disk3
