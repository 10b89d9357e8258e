#include "disk3/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace disk3 {

namespace {

void check_domain(const PlaneGraph& g, const Precoloring& phi) {
  if (static_cast<int>(phi.size()) != g.n)
    throw Error(Err::DomainMismatch, "precoloring size " + std::to_string(phi.size()) +
                                         " does not match vertex count " + std::to_string(g.n));
  for (int8_t c : phi)
    if (c < 0 || c > 3) throw Error(Err::DomainMismatch, "color out of range");
}

// Backtracking over color-candidate bitmasks.  adj may differ from g.adj so
// the same search serves edge-deleted subgraphs.
struct Search {
  int n;
  const uint64_t* adj;
  std::vector<uint8_t> avail;  // bit c-1 set = color c usable
  std::vector<int8_t> color;
  uint64_t uncolored = 0;

  // False when phi is already improper.
  bool init(const Precoloring& phi) {
    avail.assign(n, 7);
    color.assign(phi.begin(), phi.end());
    uncolored = 0;
    for (int v = 0; v < n; ++v) {
      if (color[v] == 0) {
        uncolored |= uint64_t{1} << v;
        continue;
      }
      uint64_t nb = adj[v];
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[w] == color[v]) return false;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] == 0) continue;
      uint64_t nb = adj[v];
      uint8_t strip = static_cast<uint8_t>(~(1u << (color[v] - 1)));
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        avail[w] &= strip;
      }
    }
    return true;
  }

  int pick() const {
    int best = -1, best_cnt = 4;
    uint64_t rest = uncolored;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int cnt = std::popcount(static_cast<unsigned>(avail[v]));
      if (cnt < best_cnt) {
        best = v;
        best_cnt = cnt;
        if (cnt == 0) break;
      }
    }
    return best;
  }

  bool find_one() {
    if (!uncolored) return true;
    int v = pick();
    uint8_t cands = avail[v];
    if (!cands) return false;
    uncolored &= ~(uint64_t{1} << v);
    while (cands) {
      int c = std::countr_zero(static_cast<unsigned>(cands)) + 1;
      cands &= static_cast<uint8_t>(cands - 1);
      color[v] = static_cast<int8_t>(c);
      uint64_t touched = 0;
      uint64_t nb = adj[v];
      uint8_t bit = static_cast<uint8_t>(1u << (c - 1));
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (avail[w] & bit) {
          avail[w] &= static_cast<uint8_t>(~bit);
          touched |= uint64_t{1} << w;
        }
      }
      if (find_one()) return true;
      while (touched) {
        int w = std::countr_zero(touched);
        touched &= touched - 1;
        avail[w] |= bit;
      }
    }
    color[v] = 0;
    uncolored |= uint64_t{1} << v;
    return false;
  }

  long long count_all() {
    if (!uncolored) return 1;
    int v = pick();
    uint8_t cands = avail[v];
    if (!cands) return 0;
    uncolored &= ~(uint64_t{1} << v);
    long long total = 0;
    while (cands) {
      int c = std::countr_zero(static_cast<unsigned>(cands)) + 1;
      cands &= static_cast<uint8_t>(cands - 1);
      color[v] = static_cast<int8_t>(c);
      uint64_t touched = 0;
      uint64_t nb = adj[v];
      uint8_t bit = static_cast<uint8_t>(1u << (c - 1));
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (avail[w] & bit) {
          avail[w] &= static_cast<uint8_t>(~bit);
          touched |= uint64_t{1} << w;
        }
      }
      total += count_all();
      while (touched) {
        int w = std::countr_zero(touched);
        touched &= touched - 1;
        avail[w] |= bit;
      }
    }
    color[v] = 0;
    uncolored |= uint64_t{1} << v;
    return total;
  }
};

std::optional<Precoloring> extend_on(int n, const uint64_t* adj, const Precoloring& phi) {
  Search s{n, adj, {}, {}, 0};
  if (!s.init(phi)) return std::nullopt;
  if (!s.find_one()) return std::nullopt;
  return Precoloring(s.color.begin(), s.color.end());
}

}  // namespace

std::optional<Precoloring> extend_coloring(const PlaneGraph& g, const Precoloring& phi) {
  check_domain(g, phi);
  return extend_on(g.n, g.adj.data(), phi);
}

long long count_extensions(const PlaneGraph& g, const Precoloring& phi) {
  check_domain(g, phi);
  Search s{g.n, g.adj.data(), {}, {}, 0};
  if (!s.init(phi)) return 0;
  return s.count_all();
}

std::vector<Precoloring> proper_precolorings(const PlaneGraph& g) {
  std::vector<int> walk = g.outer_cycle();
  const int k = static_cast<int>(walk.size());
  std::vector<Precoloring> out;
  Precoloring phi(g.n, 0);
  std::vector<int8_t> chosen(k, 0);
  // Lexicographic over colors along the walk; neighbors on the cycle differ.
  int i = 0;
  while (i >= 0) {
    int8_t c = static_cast<int8_t>(chosen[i] + 1);
    if (c > 3) {
      chosen[i] = 0;
      --i;
      continue;
    }
    chosen[i] = c;
    if (i > 0 && chosen[i - 1] == c) continue;
    if (i == k - 1 && chosen[0] == c) continue;
    if (i == k - 1) {
      for (int j = 0; j < k; ++j) phi[walk[j]] = chosen[j];
      out.push_back(phi);
      for (int j = 0; j < k; ++j) phi[walk[j]] = 0;
      continue;
    }
    ++i;
  }
  return out;
}

CriticalityReport criticality(const PlaneGraph& g) {
  std::vector<int> walk = g.outer_cycle();
  const int k = static_cast<int>(walk.size());

  std::vector<uint64_t> on_outer(g.n, 0);
  for (int i = 0; i < k; ++i) {
    int u = walk[i], v = walk[(i + 1) % k];
    on_outer[u] |= uint64_t{1} << v;
    on_outer[v] |= uint64_t{1} << u;
  }

  CriticalityReport rep;
  if (g.n == k && g.edges == k) {
    rep.graph_equals_outer = true;
    return rep;
  }

  std::vector<Precoloring> prec = proper_precolorings(g);
  std::vector<char> extends(prec.size());
  for (size_t i = 0; i < prec.size(); ++i)
    extends[i] = extend_on(g.n, g.adj.data(), prec[i]).has_value();

  std::vector<uint64_t> adj = g.adj;
  rep.is_critical = true;
  for (int u = 0; u < g.n && rep.is_critical; ++u) {
    uint64_t nb = g.adj[u] & ~on_outer[u];
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (v < u) continue;
      SubgraphWitness w;
      w.removed_u = u;
      w.removed_v = v;
      adj[u] &= ~(uint64_t{1} << v);
      adj[v] &= ~(uint64_t{1} << u);
      for (size_t i = 0; i < prec.size(); ++i) {
        if (extends[i]) continue;
        if (extend_on(g.n, adj.data(), prec[i])) {
          w.found = true;
          w.phi = prec[i];
          break;
        }
      }
      adj[u] |= uint64_t{1} << v;
      adj[v] |= uint64_t{1} << u;
      if (!w.found) rep.is_critical = false;
      rep.witnesses.push_back(std::move(w));
      if (!rep.is_critical) break;
    }
  }
  return rep;
}

bool is_critical(const PlaneGraph& g) { return criticality(g).is_critical; }

}  // namespace disk3
