#pragma once

// Cyclic-group model for ordinary-line counting.  Points are residues in
// Z/7m; the "line" through x and y meets the model in the third point
// z = -(x+y), so a pair is ordinary exactly when z falls outside the
// configuration (or coincides with x or y, the tangent cases y = -2x and
// x = -2y).  Counting is exact integer arithmetic throughout; the planar
// picture lives in elliptic_embedding.hpp.

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quintet::ordinary {

struct GroupPointSet {
  long long m = 0;       // subgroup index: |configuration ambient| = 7m
  long long order = 0;   // 7m
  int tail_size = 0;     // s in [0, 5]
  std::vector<std::uint8_t> member;  // indicator over residues [0, 7m)
  std::vector<long long> members;    // ascending residues

  bool contains(long long r) const { return r >= 0 && r < order && member[static_cast<std::size_t>(r)]; }
};

// Residues of the encoded tail multiples {h, 2h, -3h, 3h, -4h} with h = 7,
// reduced mod 7m; the first s entries form the tail for size parameter s.
inline std::array<long long, 5> tail_residues(long long m) {
  long long order = 7 * m;
  auto red = [order](long long v) { return ((v % order) + order) % order; };
  return {red(7), red(14), red(-21), red(21), red(-28)};
}

// Base configuration: every residue not divisible by 7.  |members| = 6m.
inline GroupPointSet build_base_set(long long m) {
  if (m < 1) throw std::invalid_argument("build_base_set: m must be positive");
  GroupPointSet set;
  set.m = m;
  set.order = 7 * m;
  set.tail_size = 0;
  set.member.assign(static_cast<std::size_t>(set.order), 0);
  for (long long r = 0; r < set.order; ++r) {
    if (r % 7 != 0) {
      set.member[static_cast<std::size_t>(r)] = 1;
      set.members.push_back(r);
    }
  }
  return set;
}

// Size-n configuration, n = 6m + s with 0 <= s <= 5: base set plus the
// first s tail residues.  Distinctness of the tail needs m >= 12, hence
// the n >= 72 hypothesis.
inline GroupPointSet build_adjusted_set(long long n) {
  if (n < 72) throw std::invalid_argument("build_adjusted_set: n must be >= 72");
  long long m = n / 6;
  int s = static_cast<int>(n - 6 * m);
  GroupPointSet set = build_base_set(m);
  set.tail_size = s;
  auto tail = tail_residues(m);
  for (int i = 0; i < s; ++i) {
    long long t = tail[static_cast<std::size_t>(i)];
    if (t == 0 || set.member[static_cast<std::size_t>(t)])
      throw std::logic_error("build_adjusted_set: tail residue collision");
    set.member[static_cast<std::size_t>(t)] = 1;
    set.members.push_back(t);
  }
  std::sort(set.members.begin(), set.members.end());
  return set;
}

// Ordinary-pair predicate: the third point z = -(x+y) mod 7m is absent
// from the configuration, or equals one of x, y.
inline bool is_ordinary(const GroupPointSet& set, long long x, long long y) {
  if (x == y) throw std::invalid_argument("is_ordinary: points must be distinct");
  if (!set.contains(x) || !set.contains(y))
    throw std::invalid_argument("is_ordinary: points must belong to the configuration");
  long long z = (2 * set.order - x - y) % set.order;
  return z == x || z == y || !set.member[static_cast<std::size_t>(z)];
}

struct OrdinaryLineGraph {
  long long order = 0;                                // ambient modulus
  std::vector<long long> vertices;                    // ascending residues
  std::vector<std::pair<long long, long long>> edges; // unordered pairs, x < y
  long long edge_count() const { return static_cast<long long>(edges.size()); }
};

// Full O(|A|^2) pair scan.
inline OrdinaryLineGraph ordinary_line_graph(const GroupPointSet& set) {
  OrdinaryLineGraph g;
  g.order = set.order;
  g.vertices = set.members;
  const auto& v = set.members;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      long long x = v[i], y = v[j];
      long long z = (2 * set.order - x - y) % set.order;
      if (z == x || z == y || !set.member[static_cast<std::size_t>(z)])
        g.edges.emplace_back(x, y);
    }
  }
  return g;
}

struct BipartiteResult {
  bool bipartite = false;
  // side[i] in {0,1} for vertices[i] when bipartite
  std::vector<int> side;
  // odd closed walk witnessing non-bipartiteness (first == last) otherwise
  std::vector<long long> odd_cycle;
};

// BFS 2-coloring with an explicit witness either way.
inline BipartiteResult is_bipartite(const OrdinaryLineGraph& g) {
  std::size_t n = g.vertices.size();
  std::vector<long long> index_of(static_cast<std::size_t>(g.order), -1);
  for (std::size_t i = 0; i < n; ++i) index_of[static_cast<std::size_t>(g.vertices[i])] = static_cast<long long>(i);
  std::vector<std::vector<int>> adj(n);
  for (auto [x, y] : g.edges) {
    int a = static_cast<int>(index_of[static_cast<std::size_t>(x)]);
    int b = static_cast<int>(index_of[static_cast<std::size_t>(y)]);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  BipartiteResult res;
  res.side.assign(n, -1);
  std::vector<int> parent(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (res.side[root] != -1) continue;
    res.side[root] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(root));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (res.side[static_cast<std::size_t>(w)] == -1) {
          res.side[static_cast<std::size_t>(w)] = 1 - res.side[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(w)] = u;
          q.push(w);
        } else if (res.side[static_cast<std::size_t>(w)] == res.side[static_cast<std::size_t>(u)]) {
          // Conflict edge closes an odd cycle through the BFS tree.
          std::vector<int> pu, pw;
          for (int t = u; t != -1; t = parent[static_cast<std::size_t>(t)]) pu.push_back(t);
          for (int t = w; t != -1; t = parent[static_cast<std::size_t>(t)]) pw.push_back(t);
          std::reverse(pu.begin(), pu.end());
          std::reverse(pw.begin(), pw.end());
          std::size_t common = 0;
          while (common + 1 < pu.size() && common + 1 < pw.size() && pu[common + 1] == pw[common + 1]) ++common;
          res.odd_cycle.clear();
          for (std::size_t t = common; t < pu.size(); ++t) res.odd_cycle.push_back(g.vertices[static_cast<std::size_t>(pu[t])]);
          for (std::size_t t = pw.size(); t-- > common;) res.odd_cycle.push_back(g.vertices[static_cast<std::size_t>(pw[t])]);
          res.bipartite = false;
          res.side.clear();
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

namespace detail {

inline bool clique_search(const std::vector<std::vector<std::uint8_t>>& adj,
                          std::vector<int>& clique, std::vector<int>& cands, int need) {
  if (need == 0) return true;
  if (static_cast<int>(cands.size()) < need) return false;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    int v = cands[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(cands[j])]) next.push_back(cands[j]);
    clique.push_back(v);
    if (clique_search(adj, clique, next, need - 1)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace detail

// True iff the graph has no K_r.  Bipartite graphs are clique-free for all
// r >= 3; otherwise a direct branch-and-bound subset search runs.
inline bool clique_free(const OrdinaryLineGraph& g, int r) {
  if (r < 3) throw std::invalid_argument("clique_free: r must be >= 3");
  if (is_bipartite(g).bipartite) return true;
  std::size_t n = g.vertices.size();
  std::vector<long long> index_of(static_cast<std::size_t>(g.order), -1);
  for (std::size_t i = 0; i < n; ++i) index_of[static_cast<std::size_t>(g.vertices[i])] = static_cast<long long>(i);
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (auto [x, y] : g.edges) {
    auto a = static_cast<std::size_t>(index_of[static_cast<std::size_t>(x)]);
    auto b = static_cast<std::size_t>(index_of[static_cast<std::size_t>(y)]);
    adj[a][b] = adj[b][a] = 1;
  }
  std::vector<int> clique, cands(n);
  for (std::size_t i = 0; i < n; ++i) cands[i] = static_cast<int>(i);
  return !detail::clique_search(adj, clique, cands, r);
}

// Unordered pairs {x, -2x mod 7m} inside the base set (the tangent pairs).
// Each pair has a unique tangent point: if both x = -2y and y = -2x held,
// then 3x ≡ 0 and the pair would degenerate to y = x.  So iterating over
// tangent points x counts every pair exactly once.
inline long long tangent_pair_count(long long m) {
  long long order = 7 * m;
  long long count = 0;
  for (long long x = 0; x < order; ++x) {
    if (x % 7 == 0) continue;
    long long y = ((-2 * x) % order + order) % order;
    if (y % 7 == 0 || y == x) continue;
    ++count;
  }
  return count;
}

// Edge count of the graph induced on the tail for each size s; pure
// arithmetic in the subgroup generated by h (valid once m >= 12).
inline constexpr std::array<int, 6> tail_edge_table = {0, 0, 1, 0, 3, 4};

// Structural count along the coset decomposition: 3m^2 opposite-coset
// pairs minus 3m destroyed per tail point, plus surviving tangent pairs
// and the tail-internal edges.  Independent of the pair-scan route.
inline long long structural_ord(long long n) {
  if (n < 72) throw std::invalid_argument("structural_ord: n must be >= 72");
  long long m = n / 6;
  long long s = n - 6 * m;
  return 3 * m * m - 3 * m * s + tangent_pair_count(m) + tail_edge_table[static_cast<std::size_t>(s)];
}

struct BoundReport {
  long long n = 0;
  long long m = 0;
  int s = 0;
  long long ord = 0;           // exact ordinary-pair count from the scan
  long long coset_bound = 0;   // 3m^2 - 3ms
  double lower_bound = 0;      // n^2/12 - 10n/3
  bool pass = false;
};

// ord(A) >= 3m^2 - 3ms >= n^2/12 - 10n/3, checked in exact integers
// (multiply the rational bound through by 12).
inline BoundReport verify_bound(long long n) {
  GroupPointSet set = build_adjusted_set(n);
  OrdinaryLineGraph g = ordinary_line_graph(set);
  BoundReport rep;
  rep.n = n;
  rep.m = set.m;
  rep.s = set.tail_size;
  rep.ord = g.edge_count();
  rep.coset_bound = 3 * rep.m * rep.m - 3 * rep.m * rep.s;
  rep.lower_bound = static_cast<double>(n) * static_cast<double>(n) / 12.0 - 10.0 * static_cast<double>(n) / 3.0;
  rep.pass = (12 * rep.ord >= n * n - 40 * n) && (rep.ord >= rep.coset_bound) &&
             (12 * rep.coset_bound >= n * n - 40 * n);
  return rep;
}

// Count of scan edges lying in opposite cosets of the base set (both
// endpoints nonzero mod 7 and x + y ≡ 0 mod 7).  Differencing this count
// across tail sizes isolates the 3m-per-point destruction law.
inline long long opposite_coset_edge_count(const OrdinaryLineGraph& g) {
  long long count = 0;
  for (auto [x, y] : g.edges)
    if (x % 7 != 0 && y % 7 != 0 && (x + y) % 7 == 0) ++count;
  return count;
}

}  // namespace quintet::ordinary
