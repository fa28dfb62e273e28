#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "signedlab/signed_graph.hpp"

namespace signedlab {

struct CycleEnumLimits {
  int max_vertices = 12;
  std::size_t max_cycles = 2'000'000;
};

// Enumerates every cycle of the multigraph as a sorted set of edge indices.
// A cycle visits distinct vertices and distinct edges; 2-cycles from parallel
// pairs count. Exponential time, intended for desk-scale hosts.
inline std::vector<std::vector<int>> all_cycles(const SignedGraph& g,
                                                const CycleEnumLimits& lim = {}) {
  if (g.vertex_count() > lim.max_vertices)
    throw size_guard_error("cycle enumeration limited to " + std::to_string(lim.max_vertices) +
                           " vertices");
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  }

  std::vector<std::vector<int>> cycles;
  std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> path_edges;
  std::vector<int> path_verts;

  // Each cycle is rooted at its minimal vertex s. Orientation is fixed by
  // requiring second vertex < last vertex (2-cycles: first edge index <
  // closing edge index), so every cycle is produced exactly once.
  std::function<void(int, int)> extend = [&](int s, int cur) {
    for (const auto& [nxt, ei] : adj[static_cast<std::size_t>(cur)]) {
      bool used = false;
      for (int pe : path_edges)
        if (pe == ei) {
          used = true;
          break;
        }
      if (used) continue;
      if (nxt == s) {
        if (path_edges.empty()) continue;  // would be a loop
        if (path_verts.size() == 2) {
          if (path_edges[0] >= ei) continue;  // 2-cycle: canonical edge order
        } else {
          if (path_verts[1] >= path_verts.back()) continue;  // direction
        }
        std::vector<int> cyc = path_edges;
        cyc.push_back(ei);
        std::sort(cyc.begin(), cyc.end());
        cycles.push_back(std::move(cyc));
        if (cycles.size() > lim.max_cycles) throw size_guard_error("too many cycles");
        continue;
      }
      if (nxt < s || on_path[static_cast<std::size_t>(nxt)]) continue;
      on_path[static_cast<std::size_t>(nxt)] = 1;
      path_verts.push_back(nxt);
      path_edges.push_back(ei);
      extend(s, nxt);
      path_edges.pop_back();
      path_verts.pop_back();
      on_path[static_cast<std::size_t>(nxt)] = 0;
    }
  };

  for (int s = 1; s <= n; ++s) {
    on_path[static_cast<std::size_t>(s)] = 1;
    path_verts = {s};
    path_edges.clear();
    extend(s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return cycles;
}

inline Parity edge_set_parity(const SignedGraph& g, const std::vector<int>& edge_indices) {
  int odd = 0;
  for (int i : edge_indices)
    if (g.edge(i).parity == Parity::Odd) ++odd;
  return (odd % 2 == 1) ? Parity::Odd : Parity::Even;
}

// The switching invariant: edge-index sets of all odd cycles.
inline std::set<std::vector<int>> odd_cycle_fingerprint(const SignedGraph& g,
                                                        const CycleEnumLimits& lim = {}) {
  std::set<std::vector<int>> out;
  for (auto& c : all_cycles(g, lim))
    if (edge_set_parity(g, c) == Parity::Odd) out.insert(std::move(c));
  return out;
}

// Zaslavsky's criterion, decided directly: the signatures differ by a cut
// delta(U) iff 2-coloring with the symmetric difference as "must cross"
// succeeds. Returns the witness U (lowest vertex of each component kept out).
inline std::optional<ReSigning> sign_equivalence_witness(const SignedGraph& g,
                                                         const std::vector<int>& sigma2) {
  std::vector<char> in_sigma2(static_cast<std::size_t>(g.edge_count()), 0);
  for (int i : sigma2) {
    if (i < 0 || i >= g.edge_count()) throw std::out_of_range("sigma2 refers to unknown edge");
    in_sigma2[static_cast<std::size_t>(i)] = 1;
  }
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  }
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  for (int root = 1; root <= n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [w, ei] : adj[static_cast<std::size_t>(v)]) {
        const Edge& e = g.edge(ei);
        int cross = (in_sigma2[static_cast<std::size_t>(ei)] != (e.parity == Parity::Odd)) ? 1 : 0;
        int want = color[static_cast<std::size_t>(v)] ^ cross;
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = want;
          stack.push_back(w);
        } else if (cw != want) {
          return std::nullopt;
        }
      }
    }
  }
  ReSigning u;
  for (int v = 1; v <= n; ++v)
    if (color[static_cast<std::size_t>(v)] == 1) u.u_set.push_back(v);
  return u;
}

inline bool is_sign_equivalent(const SignedGraph& g, const std::vector<int>& sigma2) {
  return sign_equivalence_witness(g, sigma2).has_value();
}

namespace detail {

// Every component's underlying simple graph is a path and every parallel
// class is single-parity, i.e. the graph is sign-equivalent to an all-even
// path-shaped multigraph (disjoint union when connectivity is not required).
inline bool paths_shape(const SignedGraph& g) {
  auto classes = parallel_classes(g);
  for (const auto& [pr, ps] : classes.pairs) {
    for (std::size_t i = 1; i < ps.size(); ++i)
      if (ps[i] != ps[0]) return false;  // mixed class: odd 2-cycle
  }
  SignedGraph s = underlying_simple(g);
  const int n = s.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : s.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  int nc = 0;
  for (int r = 1; r <= n; ++r) {
    if (comp[static_cast<std::size_t>(r)] != -1) continue;
    comp[static_cast<std::size_t>(r)] = nc;
    std::vector<int> stack{r};
    int verts = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++verts;
      if (adj[static_cast<std::size_t>(v)].size() > 2) return false;
      for (int w : adj[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = nc;
          stack.push_back(w);
        }
    }
    int comp_edges = 0;
    for (const Edge& e : s.edges())
      if (comp[static_cast<std::size_t>(e.u)] == nc) ++comp_edges;
    if (comp_edges != verts - 1) return false;  // cycle inside the component
    ++nc;
  }
  return true;
}

}  // namespace detail

inline bool xi_le_1_check(const SignedGraph& g) { return detail::paths_shape(g); }

inline bool m_le_1_check(const SignedGraph& g) {
  return is_connected(g) && detail::paths_shape(g);
}

}  // namespace signedlab
