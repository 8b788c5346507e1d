// Copyright 2026 The graphclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHCLASS_GRAPH_HPP_
#define GRAPHCLASS_GRAPH_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphclass {

/// Hard cap on vertex count. Adjacency rows are 16-bit masks, and the packed
/// upper-triangle code below must fit in 128 bits (n = 12 needs 66).
inline constexpr int kMaxVertices = 12;

/// Upper-triangle adjacency bits packed column-major (the graph6 bit order:
/// (0,1), (0,2), (1,2), (0,3), ...), earliest bit most significant. Gives a
/// total order on graphs of equal vertex count.
struct GraphCode {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend constexpr auto operator<=>(const GraphCode&, const GraphCode&) = default;
};

/// Undirected simple graph on vertices 0..n-1, stored as one GF(2) adjacency
/// bit-row per vertex. Value type; every operation returns a fresh graph.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw std::invalid_argument("Graph: vertex count must be in 1.." +
                                  std::to_string(kMaxVertices));
    }
    adj_.fill(0);
  }

  int vertex_count() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  /// Bitmask of neighbors of v.
  std::uint16_t neighborhood(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return std::popcount(neighborhood(v)); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  /// Idempotent: adding an existing edge is a no-op.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    adj_[u] |= std::uint16_t(1u << v);
    adj_[v] |= std::uint16_t(1u << u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= std::uint16_t(~(1u << v));
    adj_[v] &= std::uint16_t(~(1u << u));
  }

  /// Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if ((adj_[u] >> v) & 1u) out.emplace_back(u, v);
      }
    }
    return out;
  }

  GraphCode code() const {
    GraphCode c;
    for (int col = 1; col < n_; ++col) {
      for (int row = 0; row < col; ++row) {
        c.hi = (c.hi << 1) | (c.lo >> 63);
        c.lo = (c.lo << 1) | ((adj_[row] >> col) & 1u);
      }
    }
    return c;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

  /// Orders by vertex count, then by packed adjacency code.
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.code() <=> b.code();
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n_));
    }
  }

  int n_;
  std::array<std::uint16_t, kMaxVertices> adj_;

  friend Graph local_complement(const Graph&, int);
};

/// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
/// out-of-range endpoints throw.
inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Local complementation at v: complements the subgraph induced by the
/// neighborhood of v. An involution; the core LC move on graph states.
inline Graph local_complement(const Graph& g, int v) {
  const std::uint16_t nb = g.neighborhood(v);  // validates v
  Graph h = g;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if ((nb >> u) & 1u) h.adj_[u] ^= nb & std::uint16_t(~(1u << u));
  }
  return h;
}

/// Masks of the connected components, ordered by lowest contained vertex.
inline std::vector<std::uint16_t> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint16_t> out;
  std::uint16_t visited = 0;
  for (int v = 0; v < n; ++v) {
    if ((visited >> v) & 1u) continue;
    std::uint16_t comp = std::uint16_t(1u << v);
    std::uint16_t frontier = comp;
    while (frontier) {
      std::uint16_t next = 0;
      std::uint16_t f = frontier;
      while (f) {
        int u = std::countr_zero(f);
        f &= std::uint16_t(f - 1);
        next |= g.neighborhood(u);
      }
      frontier = next & std::uint16_t(~comp);
      comp |= next;
    }
    visited |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return connected_components(g).size() == 1;
}

/// Subgraph induced by the vertices in mask, relabeled 0..k-1 in ascending
/// order of their original labels.
inline Graph induced_subgraph(const Graph& g, std::uint16_t mask) {
  if (mask == 0 || (mask >> g.vertex_count()) != 0) {
    throw std::invalid_argument("induced_subgraph: mask is not a non-empty vertex subset");
  }
  std::array<int, kMaxVertices> to_new{};
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((mask >> v) & 1u) to_new[v] = k++;
  }
  Graph h(k);
  for (const auto& [u, v] : g.edges()) {
    if (((mask >> u) & 1u) && ((mask >> v) & 1u)) h.add_edge(to_new[u], to_new[v]);
  }
  return h;
}

/// Relabeling of n vertices; image[v] is where v goes.
struct VertexPermutation {
  int n = 0;
  std::array<std::uint8_t, kMaxVertices> image{};

  static VertexPermutation identity(int n) {
    VertexPermutation p;
    p.n = n;
    for (int v = 0; v < n; ++v) p.image[v] = std::uint8_t(v);
    return p;
  }

  bool is_valid() const {
    if (n < 1 || n > kMaxVertices) return false;
    std::uint16_t seen = 0;
    for (int v = 0; v < n; ++v) {
      if (image[v] >= n) return false;
      seen |= std::uint16_t(1u << image[v]);
    }
    return seen == std::uint16_t((1u << n) - 1);
  }
};

inline VertexPermutation inverse(const VertexPermutation& p) {
  if (!p.is_valid()) throw std::invalid_argument("inverse: invalid permutation");
  VertexPermutation q;
  q.n = p.n;
  for (int v = 0; v < p.n; ++v) q.image[p.image[v]] = std::uint8_t(v);
  return q;
}

inline Graph apply_permutation(const Graph& g, const VertexPermutation& p) {
  if (!p.is_valid() || p.n != g.vertex_count()) {
    throw std::invalid_argument("apply_permutation: permutation does not fit graph");
  }
  Graph h(g.vertex_count());
  for (const auto& [u, v] : g.edges()) h.add_edge(p.image[u], p.image[v]);
  return h;
}

struct CanonicalForm {
  Graph graph;
  VertexPermutation permutation;  // apply_permutation(input, permutation) == graph
};

namespace detail {

// Swapping u and v is an automorphism iff their rows agree outside {u, v}.
// Covers both twin kinds (shared neighborhood, adjacent or not).
inline bool are_twins(const Graph& g, int u, int v) {
  const std::uint16_t b = std::uint16_t((1u << u) | (1u << v));
  return (g.neighborhood(u) | b) == (g.neighborhood(v) | b);
}

}  // namespace detail

/// Canonical labeling: the minimum packed adjacency code over all vertex
/// orderings that respect the (degree, sorted neighbor-degree multiset)
/// partition, cells in ascending key order. Exact search: partial orderings
/// are grown position by position, keeping every prefix that attains the
/// minimal next column (ties explored, never guessed away); candidates that
/// are twins of an already-kept candidate are skipped, which caps the
/// frontier on highly symmetric graphs. Same canonical graph for all members
/// of an isomorphism class.
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();

  // kappa(v) = (degree, ascending neighbor degrees); cells ascending by kappa.
  std::array<std::vector<int>, kMaxVertices> kappa;
  for (int v = 0; v < n; ++v) {
    kappa[v].push_back(g.degree(v));
    std::uint16_t nb = g.neighborhood(v);
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= std::uint16_t(nb - 1);
      kappa[v].push_back(g.degree(u));
    }
    std::sort(kappa[v].begin() + 1, kappa[v].end());
  }
  std::array<int, kMaxVertices> order{};
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.begin() + n,
            [&](int a, int b) { return kappa[a] != kappa[b] ? kappa[a] < kappa[b] : a < b; });
  // cell_of_pos[p] = list of vertices eligible for position p
  std::vector<std::vector<int>> cells;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || kappa[order[i]] != kappa[order[i - 1]]) cells.emplace_back();
    cells.back().push_back(order[i]);
  }
  std::array<const std::vector<int>*, kMaxVertices> cell_of_pos{};
  for (std::size_t c = 0, p = 0; c < cells.size(); ++c) {
    for (std::size_t i = 0; i < cells[c].size(); ++i) cell_of_pos[p++] = &cells[c];
  }

  struct State {
    std::array<std::uint8_t, kMaxVertices> placed;
    std::uint16_t used = 0;
  };
  std::vector<State> frontier(1);
  std::vector<State> next;
  for (int pos = 0; pos < n; ++pos) {
    std::uint32_t best = UINT32_MAX;
    next.clear();
    for (const State& s : frontier) {
      int reps[kMaxVertices];
      int nreps = 0;
      for (int v : *cell_of_pos[pos]) {
        if ((s.used >> v) & 1u) continue;
        bool dup = false;
        for (int i = 0; i < nreps && !dup; ++i) dup = detail::are_twins(g, reps[i], v);
        if (dup) continue;
        reps[nreps++] = v;
        std::uint32_t col = 0;
        const std::uint16_t row = g.neighborhood(v);
        for (int j = 0; j < pos; ++j) col = (col << 1) | ((row >> s.placed[j]) & 1u);
        if (col > best) continue;
        if (col < best) {
          best = col;
          next.clear();
        }
        State t = s;
        t.placed[pos] = std::uint8_t(v);
        t.used |= std::uint16_t(1u << v);
        next.push_back(t);
      }
    }
    frontier.swap(next);
  }

  const State& win = frontier.front();
  Graph canon(n);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (g.has_edge(win.placed[p], win.placed[q])) canon.add_edge(p, q);
    }
  }
  VertexPermutation perm;
  perm.n = n;
  for (int p = 0; p < n; ++p) perm.image[win.placed[p]] = std::uint8_t(p);
  return CanonicalForm{canon, perm};
}

/// levels[k] (1 <= k <= n_max) = all canonical connected graphs on k
/// vertices, sorted by code. Level k is produced by attaching vertex k-1 to
/// every non-empty neighborhood in every level-(k-1) graph: any connected
/// graph has a vertex whose removal keeps it connected (a spanning-tree
/// leaf), so nothing is missed.
inline std::vector<std::vector<Graph>> connected_graph_levels(int n_max) {
  if (n_max < 1 || n_max > kMaxVertices) {
    throw std::invalid_argument("connected_graph_levels: n_max out of range");
  }
  std::vector<std::vector<Graph>> levels(std::size_t(n_max) + 1);
  levels[1].push_back(Graph(1));
  for (int k = 2; k <= n_max; ++k) {
    std::set<GraphCode> seen;
    std::vector<Graph> found;
    for (const Graph& parent : levels[std::size_t(k) - 1]) {
      for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
        Graph child(k);
        for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
        for (std::uint32_t m = mask; m;) {
          int u = std::countr_zero(m);
          m &= m - 1;
          child.add_edge(u, k - 1);
        }
        Graph canon = canonical_form(child).graph;
        if (seen.insert(canon.code()).second) found.push_back(std::move(canon));
      }
    }
    std::sort(found.begin(), found.end());
    levels[std::size_t(k)] = std::move(found);
  }
  return levels;
}

/// All connected graphs on n vertices up to isomorphism (canonical forms,
/// sorted by code).
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  return std::move(connected_graph_levels(n)[std::size_t(n)]);
}

}  // namespace graphclass

#endif  // GRAPHCLASS_GRAPH_HPP_
