#pragma once

// Pentagon-caterpillar gadget graphs.  Spine pentagons S_0..S_m form a
// path (S_i[c] joined to S_{i+1}[a]); leaf pentagons hang off spine slots
// (S_0: a,b,d,e; internal S_i: b,d,e; S_m: b,c,d,e) through a single
// attachment edge S_i[x] -- L_{i,x}[X]; one extra vertex v is adjacent to
// the four non-attachment vertices of every leaf.  Every vertex except v
// then has degree exactly 3, there are 4m+6 blocks and 20m+31 vertices.
//
// The checks: K4-freeness, chromatic number 4 with an exhausted 3-color
// search, 2-degeneracy of every edge-deleted subgraph, and the chord
// maximum over all simple cycles (two independent enumerators).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintet/errors.hpp"

namespace quintet::gadget {

using Adjacency = std::vector<std::vector<int>>;

struct VertexId {
  bool special = false;  // the vertex v
  bool leaf = false;     // leaf block (vs spine)
  int block = 0;         // spine index i, or the leaf's host spine index
  int attach = -1;       // leaf attachment slot 0..4 (letter a..e); -1 for spine
  int pos = 0;           // position in the pentagon, 0..4 (a..e / A..E)

  std::string label() const {
    static constexpr char lower[] = "abcde";
    static constexpr char upper[] = "ABCDE";
    if (special) return "v";
    if (!leaf) return "S" + std::to_string(block) + "." + lower[pos];
    return "L" + std::to_string(block) + "." + lower[attach] + "." + upper[pos];
  }
};

struct GadgetGraph {
  int m = 0;
  Adjacency adj;
  std::vector<VertexId> ids;
  int v_index = -1;
  int block_count = 0;

  int vertex_count() const { return static_cast<int>(adj.size()); }
  long long edge_count() const {
    long long deg = 0;
    for (const auto& nbrs : adj) deg += static_cast<long long>(nbrs.size());
    return deg / 2;
  }
  // spine vertex S_i[pos]
  int spine_vertex(int i, int pos) const { return i * 5 + pos; }
  // leaf vertex L_{i,attach}[pos], or -1 when that leaf does not exist
  int leaf_vertex(int i, int attach, int pos) const {
    int base = leaf_base[static_cast<std::size_t>(i)][static_cast<std::size_t>(attach)];
    return base < 0 ? -1 : base + pos;
  }
  std::vector<std::array<int, 5>> leaf_base;  // [spine i][slot] -> first vertex index
};

// Leaf slots per spine position: S_0 gets a,b,d,e; internal spines b,d,e;
// S_m gets b,c,d,e.  (S_0 has no left spine edge, so slot a is free; S_m
// has no right spine edge, so slot c is free.)
inline std::vector<int> leaf_slots(int i, int m) {
  if (m == 0) throw std::invalid_argument("leaf_slots: m must be >= 1");
  if (i == 0) return {0, 1, 3, 4};
  if (i == m) return {1, 2, 3, 4};
  return {1, 3, 4};
}

inline GadgetGraph build_graph(int m) {
  if (m < 1) throw std::invalid_argument("build_graph: m must be >= 1");
  GadgetGraph g;
  g.m = m;
  g.leaf_base.assign(static_cast<std::size_t>(m) + 1, {-1, -1, -1, -1, -1});

  int next = 5 * (m + 1);  // spine vertices occupy [0, 5(m+1))
  int leaf_blocks = 0;
  for (int i = 0; i <= m; ++i) {
    for (int slot : leaf_slots(i, m)) {
      g.leaf_base[static_cast<std::size_t>(i)][static_cast<std::size_t>(slot)] = next;
      next += 5;
      ++leaf_blocks;
    }
  }
  int v = next;
  int total = v + 1;
  g.v_index = v;
  g.block_count = (m + 1) + leaf_blocks;
  g.adj.assign(static_cast<std::size_t>(total), {});
  g.ids.assign(static_cast<std::size_t>(total), {});

  auto add_edge = [&g](int a, int b) {
    g.adj[static_cast<std::size_t>(a)].push_back(b);
    g.adj[static_cast<std::size_t>(b)].push_back(a);
  };

  for (int i = 0; i <= m; ++i)
    for (int p = 0; p < 5; ++p)
      g.ids[static_cast<std::size_t>(g.spine_vertex(i, p))] = {false, false, i, -1, p};
  g.ids[static_cast<std::size_t>(v)] = {true, false, 0, -1, 0};

  // pentagons
  auto pentagon = [&](int base) {
    for (int p = 0; p < 5; ++p) add_edge(base + p, base + (p + 1) % 5);
  };
  for (int i = 0; i <= m; ++i) pentagon(g.spine_vertex(i, 0));
  for (int i = 0; i <= m; ++i) {
    for (int slot : leaf_slots(i, m)) {
      int base = g.leaf_base[static_cast<std::size_t>(i)][static_cast<std::size_t>(slot)];
      pentagon(base);
      for (int p = 0; p < 5; ++p)
        g.ids[static_cast<std::size_t>(base + p)] = {false, true, i, slot, p};
    }
  }

  // spine path and leaf attachments
  for (int i = 0; i < m; ++i) add_edge(g.spine_vertex(i, 2), g.spine_vertex(i + 1, 0));
  for (int i = 0; i <= m; ++i) {
    for (int slot : leaf_slots(i, m)) {
      int attach = g.leaf_vertex(i, slot, slot);  // L_{i,x}[X]
      add_edge(g.spine_vertex(i, slot), attach);
      for (int p = 0; p < 5; ++p)
        if (p != slot) add_edge(v, g.leaf_vertex(i, slot, p));
    }
  }

  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

// ---------------------------------------------------------------------
// generic graph checks (adjacency-list based, usable on synthetic graphs)
// ---------------------------------------------------------------------

inline bool has_edge(const Adjacency& adj, int a, int b) {
  const auto& nbrs = adj[static_cast<std::size_t>(a)];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

inline bool has_triangle(const Adjacency& adj) {
  int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u)
    for (int w : adj[static_cast<std::size_t>(u)])
      if (w > u)
        for (int t : adj[static_cast<std::size_t>(w)])
          if (t > w && has_edge(adj, u, t)) return true;
  return false;
}

inline bool has_k4(const Adjacency& adj) {
  int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (w <= u) continue;
      // common neighbors of u, w above w
      std::vector<int> common;
      for (int t : adj[static_cast<std::size_t>(u)])
        if (t > w && has_edge(adj, w, t)) common.push_back(t);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (has_edge(adj, common[i], common[j])) return true;
    }
  }
  return false;
}

inline bool check_k4_free(const Adjacency& adj) { return !has_k4(adj); }

// Structured route: the graph minus v is triangle-free (pentagons joined
// by cut edges) and the neighborhood of v induces disjoint paths.
inline bool check_k4_free_structured(const GadgetGraph& g) {
  Adjacency without_v = g.adj;
  int v = g.v_index;
  without_v[static_cast<std::size_t>(v)].clear();
  for (auto& nbrs : without_v) std::erase(nbrs, v);
  if (has_triangle(without_v)) return false;
  // induced neighborhood of v: all degrees <= 2 and no cycle
  const auto& nv = g.adj[static_cast<std::size_t>(v)];
  for (int a : nv) {
    int deg = 0;
    for (int b : nv)
      if (b != a && has_edge(g.adj, a, b)) ++deg;
    if (deg > 2) return false;
  }
  Adjacency induced(g.adj.size());
  for (int a : nv)
    for (int b : nv)
      if (a < b && has_edge(g.adj, a, b)) {
        induced[static_cast<std::size_t>(a)].push_back(b);
        induced[static_cast<std::size_t>(b)].push_back(a);
      }
  // cycle in a degree-<=2 graph would mean #edges >= #vertices in a component
  std::vector<int> comp(g.adj.size(), -1);
  for (int a : nv) {
    if (comp[static_cast<std::size_t>(a)] != -1) continue;
    std::vector<int> stack{a};
    comp[static_cast<std::size_t>(a)] = a;
    int vertices = 0, degsum = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++vertices;
      degsum += static_cast<int>(induced[static_cast<std::size_t>(u)].size());
      for (int w : induced[static_cast<std::size_t>(u)])
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = a;
          stack.push_back(w);
        }
    }
    if (degsum / 2 >= vertices) return false;  // component carries a cycle
  }
  return true;
}

// ---------------------------------------------------------------------
// exact coloring
// ---------------------------------------------------------------------

struct ColoringResult {
  int chromatic = 0;               // smallest color count <= limit that works
  bool found = false;              // false when even `limit` colors fail
  std::vector<int> coloring;       // proper coloring certificate
  std::uint64_t unsat_nodes = 0;   // nodes exhausted at chromatic-1 (when searched)
  bool budget_exceeded = false;
};

namespace detail {

// Forward-checking backtracker with most-constrained-vertex selection.
// Domains are color bitmasks.  Returns true when a proper coloring was
// found (written to `out`); `nodes` counts attempted assignments.
inline bool color_search(const Adjacency& adj, int colors, std::vector<int>& out,
                         std::uint64_t& nodes, std::uint64_t budget, bool& exceeded) {
  int n = static_cast<int>(adj.size());
  std::uint32_t full = (1u << colors) - 1;
  std::vector<std::uint32_t> domain(static_cast<std::size_t>(n), full);
  std::vector<int> color(static_cast<std::size_t>(n), -1);

  // symmetry breaking: pin a maximum-degree vertex to color 0
  int pin = 0;
  for (int i = 1; i < n; ++i)
    if (adj[static_cast<std::size_t>(i)].size() > adj[static_cast<std::size_t>(pin)].size()) pin = i;

  std::function<bool()> dfs = [&]() -> bool {
    if (exceeded) return false;
    // unit propagation to a fixpoint
    std::vector<std::pair<int, std::vector<std::pair<int, std::uint32_t>>>> trail;
    auto undo_all = [&]() {
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        color[static_cast<std::size_t>(it->first)] = -1;
        for (auto& [w, bit] : it->second) domain[static_cast<std::size_t>(w)] |= bit;
      }
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < n; ++u) {
        if (color[static_cast<std::size_t>(u)] != -1) continue;
        std::uint32_t d = domain[static_cast<std::size_t>(u)];
        if (d == 0) { undo_all(); return false; }
        if (std::popcount(d) == 1) {
          int c = std::countr_zero(d);
          color[static_cast<std::size_t>(u)] = c;
          std::vector<std::pair<int, std::uint32_t>> removed;
          for (int w : adj[static_cast<std::size_t>(u)]) {
            if (color[static_cast<std::size_t>(w)] == -1 && (domain[static_cast<std::size_t>(w)] >> c) & 1) {
              domain[static_cast<std::size_t>(w)] &= ~(1u << c);
              removed.emplace_back(w, 1u << c);
            }
          }
          trail.emplace_back(u, std::move(removed));
          changed = true;
        }
      }
    }
    // pick the most constrained unassigned vertex
    int best = -1, best_bits = colors + 1;
    for (int u = 0; u < n; ++u) {
      if (color[static_cast<std::size_t>(u)] != -1) continue;
      int bits = std::popcount(domain[static_cast<std::size_t>(u)]);
      if (bits < best_bits ||
          (bits == best_bits && best >= 0 &&
           adj[static_cast<std::size_t>(u)].size() > adj[static_cast<std::size_t>(best)].size())) {
        best = u;
        best_bits = bits;
      }
    }
    if (best == -1) return true;  // everything colored
    std::uint32_t d = domain[static_cast<std::size_t>(best)];
    for (int c = 0; c < colors; ++c) {
      if (!((d >> c) & 1)) continue;
      if (++nodes > budget) { exceeded = true; undo_all(); return false; }
      color[static_cast<std::size_t>(best)] = c;
      std::vector<std::pair<int, std::uint32_t>> removed;
      bool dead = false;
      for (int w : adj[static_cast<std::size_t>(best)]) {
        if (color[static_cast<std::size_t>(w)] == c) { dead = true; }
        if (color[static_cast<std::size_t>(w)] == -1 && (domain[static_cast<std::size_t>(w)] >> c) & 1) {
          domain[static_cast<std::size_t>(w)] &= ~(1u << c);
          removed.emplace_back(w, 1u << c);
        }
      }
      if (!dead && dfs()) return true;
      color[static_cast<std::size_t>(best)] = -1;
      for (auto& [w, bit] : removed) domain[static_cast<std::size_t>(w)] |= bit;
      if (exceeded) { undo_all(); return false; }
    }
    undo_all();
    return false;
  };

  if (n == 0) { out.clear(); return true; }
  domain[static_cast<std::size_t>(pin)] = 1;  // color 0 only
  bool ok = dfs();
  if (ok) out = color;
  return ok;
}

}  // namespace detail

inline bool is_bipartite_adj(const Adjacency& adj, std::vector<int>* coloring = nullptr) {
  int n = static_cast<int>(adj.size());
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (side[static_cast<std::size_t>(root)] != -1) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (side[static_cast<std::size_t>(w)] == -1) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
          q.push(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  if (coloring) *coloring = side;
  return true;
}

inline ColoringResult chromatic_number(const Adjacency& adj, int limit = 5,
                                       std::uint64_t node_budget = 50'000'000) {
  ColoringResult res;
  long long edges = 0;
  for (const auto& nbrs : adj) edges += static_cast<long long>(nbrs.size());
  if (edges == 0) {
    res.chromatic = adj.empty() ? 0 : 1;
    res.found = true;
    res.coloring.assign(adj.size(), 0);
    return res;
  }
  std::vector<int> two;
  if (is_bipartite_adj(adj, &two)) {
    res.chromatic = 2;
    res.found = true;
    res.coloring = two;
    return res;
  }
  for (int c = 3; c <= limit; ++c) {
    std::uint64_t nodes = 0;
    bool exceeded = false;
    std::vector<int> coloring;
    bool ok = detail::color_search(adj, c, coloring, nodes, node_budget, exceeded);
    if (exceeded) {
      res.budget_exceeded = true;
      res.chromatic = c;  // undecided at this level
      return res;
    }
    if (ok) {
      res.chromatic = c;
      res.found = true;
      res.coloring = coloring;
      return res;
    }
    res.unsat_nodes = nodes;  // exhausted search at level c
  }
  res.chromatic = limit + 1;
  res.found = false;
  return res;
}

// ---------------------------------------------------------------------
// degeneracy
// ---------------------------------------------------------------------

struct PeelResult {
  bool degenerate = false;      // peels completely with degrees <= 2
  std::vector<int> order;       // removal order (certificate)
  std::vector<int> stuck_core;  // nonempty subgraph of min degree >= 3
};

inline PeelResult is_2_degenerate(const Adjacency& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);
  for (int u = 0; u < n; ++u) degree[static_cast<std::size_t>(u)] = static_cast<int>(adj[static_cast<std::size_t>(u)].size());
  PeelResult res;
  int remaining = n;
  while (remaining > 0) {
    int pick = -1;
    for (int u = 0; u < n; ++u)
      if (alive[static_cast<std::size_t>(u)] && degree[static_cast<std::size_t>(u)] <= 2) { pick = u; break; }
    if (pick == -1) {
      for (int u = 0; u < n; ++u)
        if (alive[static_cast<std::size_t>(u)]) res.stuck_core.push_back(u);
      res.degenerate = false;
      return res;
    }
    alive[static_cast<std::size_t>(pick)] = 0;
    res.order.push_back(pick);
    --remaining;
    for (int w : adj[static_cast<std::size_t>(pick)])
      if (alive[static_cast<std::size_t>(w)]) --degree[static_cast<std::size_t>(w)];
  }
  res.degenerate = true;
  return res;
}

// Every proper subgraph omits an edge (or a vertex and hence its edges),
// and 2-degeneracy is monotone under taking subgraphs, so checking every
// single-edge deletion suffices.
inline bool all_proper_subgraphs_3colorable(const Adjacency& adj) {
  int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (w < u) continue;
      Adjacency cut = adj;
      std::erase(cut[static_cast<std::size_t>(u)], w);
      std::erase(cut[static_cast<std::size_t>(w)], u);
      if (!is_2_degenerate(cut).degenerate) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------
// cycle enumeration and chords
// ---------------------------------------------------------------------

struct CycleRecord {
  std::vector<int> vertices;  // in cycle order
  int chord_count = 0;
};

struct CycleStats {
  std::uint64_t count = 0;
  int max_chords = -1;
  CycleRecord max_example;
  bool cap_exceeded = false;
};

namespace detail {

// Chord count via bitset rows: sum of |N(c) ∩ C| over cycle vertices
// counts each internal edge twice, and exactly `len` of those edges are
// cycle edges.
class ChordCounter {
 public:
  explicit ChordCounter(const Adjacency& adj)
      : n_(static_cast<int>(adj.size())), words_((static_cast<std::size_t>(n_) + 63) / 64), rows_(static_cast<std::size_t>(n_) * words_, 0) {
    for (int u = 0; u < n_; ++u)
      for (int w : adj[static_cast<std::size_t>(u)])
        rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(w) / 64] |= std::uint64_t(1) << (w % 64);
    mask_.assign(words_, 0);
  }

  int count(const std::vector<int>& cycle) {
    for (int c : cycle) mask_[static_cast<std::size_t>(c) / 64] |= std::uint64_t(1) << (c % 64);
    long long total = 0;
    for (int c : cycle) {
      const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(c) * words_;
      for (std::size_t w = 0; w < words_; ++w) total += std::popcount(row[w] & mask_[w]);
    }
    for (int c : cycle) mask_[static_cast<std::size_t>(c) / 64] = 0;
    int len = static_cast<int>(cycle.size());
    return static_cast<int>(total / 2) - len;
  }

 private:
  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> mask_;
};

}  // namespace detail

// Johnson-style enumeration of all simple cycles (each reported once, in
// rooted orientation), feeding every cycle through the chord counter and
// the visitor.  Stops with cap_exceeded once `cap` cycles were produced.
template <typename Visit>
CycleStats enumerate_cycles_visit(const Adjacency& adj, std::uint64_t cap, Visit&& visit) {
  int n = static_cast<int>(adj.size());
  CycleStats stats;
  detail::ChordCounter chords(adj);

  std::vector<std::uint8_t> blocked(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> blist(static_cast<std::size_t>(n));
  std::vector<int> path;

  auto record = [&](const std::vector<int>& cycle) {
    ++stats.count;
    int ch = chords.count(cycle);
    if (ch > stats.max_chords) {
      stats.max_chords = ch;
      stats.max_example = {cycle, ch};
    }
    visit(cycle, ch);
  };

  std::function<void(int)> unblock = [&](int u) {
    blocked[static_cast<std::size_t>(u)] = 0;
    auto& bl = blist[static_cast<std::size_t>(u)];
    std::vector<int> pending;
    pending.swap(bl);
    for (int w : pending)
      if (blocked[static_cast<std::size_t>(w)]) unblock(w);
  };

  int root = 0;
  std::function<bool(int)> circuit = [&](int u) -> bool {
    if (stats.cap_exceeded) return true;
    bool found = false;
    path.push_back(u);
    blocked[static_cast<std::size_t>(u)] = 1;
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (w < root) continue;
      if (w == root) {
        // orientation rule: avoid reporting the reverse traversal
        if (path.size() >= 3 && path[1] < path.back()) {
          record(path);
          if (stats.count >= cap) stats.cap_exceeded = true;
        }
        found = true;
      } else if (!blocked[static_cast<std::size_t>(w)]) {
        if (circuit(w)) found = true;
      }
      if (stats.cap_exceeded) break;
    }
    if (found) {
      unblock(u);
    } else {
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (w < root) continue;
        auto& bl = blist[static_cast<std::size_t>(w)];
        if (std::find(bl.begin(), bl.end(), u) == bl.end()) bl.push_back(u);
      }
    }
    path.pop_back();
    return found;
  };

  for (root = 0; root < n && !stats.cap_exceeded; ++root) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (auto& bl : blist) bl.clear();
    circuit(root);
  }
  return stats;
}

inline CycleStats enumerate_cycles(const Adjacency& adj, std::uint64_t cap = 10'000'000) {
  return enumerate_cycles_visit(adj, cap, [](const std::vector<int>&, int) {});
}

// Structured enumerator specific to the gadget: cycles avoiding v are
// exactly the pentagons (inter-block edges are bridges), and every cycle
// through v is v plus a simple path between two of its neighbors in the
// pentagon tree.
inline CycleStats enumerate_cycles_structured(const GadgetGraph& g, std::uint64_t cap = 10'000'000) {
  CycleStats stats;
  detail::ChordCounter chords(g.adj);
  auto record = [&](const std::vector<int>& cycle) {
    ++stats.count;
    int ch = chords.count(cycle);
    if (ch > stats.max_chords) {
      stats.max_chords = ch;
      stats.max_example = {cycle, ch};
    }
    if (stats.count >= cap) stats.cap_exceeded = true;
  };

  // pentagons
  for (int i = 0; i <= g.m && !stats.cap_exceeded; ++i) {
    std::vector<int> cyc(5);
    for (int p = 0; p < 5; ++p) cyc[static_cast<std::size_t>(p)] = g.spine_vertex(i, p);
    record(cyc);
  }
  for (int i = 0; i <= g.m && !stats.cap_exceeded; ++i) {
    for (int slot : leaf_slots(i, g.m)) {
      std::vector<int> cyc(5);
      for (int p = 0; p < 5; ++p) cyc[static_cast<std::size_t>(p)] = g.leaf_vertex(i, slot, p);
      record(cyc);
      if (stats.cap_exceeded) break;
    }
  }

  // cycles through v: simple paths of length >= 2 between two v-neighbors
  // inside the tree of pentagons (v removed)
  int v = g.v_index;
  const auto& nv = g.adj[static_cast<std::size_t>(v)];
  std::vector<std::uint8_t> is_nv(g.adj.size(), 0);
  for (int a : nv) is_nv[static_cast<std::size_t>(a)] = 1;

  std::vector<std::uint8_t> visited(g.adj.size(), 0);
  std::vector<int> path;
  std::function<void(int, int)> dfs = [&](int u, int start) {
    if (stats.cap_exceeded) return;
    visited[static_cast<std::size_t>(u)] = 1;
    path.push_back(u);
    if (u != start && is_nv[static_cast<std::size_t>(u)] && u > start && path.size() >= 2) {
      std::vector<int> cyc = path;
      cyc.push_back(v);
      record(cyc);
    }
    for (int w : g.adj[static_cast<std::size_t>(u)]) {
      if (w == v || visited[static_cast<std::size_t>(w)]) continue;
      dfs(w, start);
      if (stats.cap_exceeded) break;
    }
    path.pop_back();
    visited[static_cast<std::size_t>(u)] = 0;
  };
  for (int a : nv) {
    if (stats.cap_exceeded) break;
    dfs(a, a);
  }
  return stats;
}

inline CycleStats max_chords(const Adjacency& adj, std::uint64_t cap = 10'000'000) {
  CycleStats stats = enumerate_cycles(adj, cap);
  if (stats.cap_exceeded) throw BudgetExceeded("cycle enumeration cap exceeded");
  return stats;
}

inline void write_dot(const GadgetGraph& g, std::ostream& out) {
  out << "graph gadget {\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    out << "  n" << u << " [label=\"" << g.ids[static_cast<std::size_t>(u)].label() << "\"];\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w : g.adj[static_cast<std::size_t>(u)])
      if (u < w) out << "  n" << u << " -- n" << w << ";\n";
  out << "}\n";
}

}  // namespace quintet::gadget
