#pragma once

#include <array>
#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "signedlab/cycles.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

// Decomposition along an odd 4-cycle r1-s1-r2-s2: side subgraphs G1 (attached
// at the nonadjacent pair {r1,r2}) and G2 (at {s1,s2}) that are vertex-disjoint
// and together with the cycle cover the whole graph.
struct WideSeparation {
  std::array<int, 4> c4_vertices{};  // cyclic order r1, s1, r2, s2
  std::array<int, 4> c4_edges{};     // r1-s1, s1-r2, r2-s2, s2-r1
  std::vector<int> g1_vertices, g2_vertices;  // attachments included
  std::vector<int> g1_edges, g2_edges;
};

namespace detail {

struct OddC4 {
  std::array<int, 4> verts;  // cyclic
  std::array<int, 4> edges;
};

inline std::vector<OddC4> odd_4_cycles(const SignedGraph& g) {
  std::vector<OddC4> out;
  const int n = g.vertex_count();
  std::vector<int> vs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          // three cyclic orders of {a,b,c,d}
          const std::array<std::array<int, 4>, 3> orders = {
              std::array{a, b, c, d}, std::array{a, b, d, c}, std::array{a, c, b, d}};
          for (const auto& w : orders) {
            std::array<std::vector<int>, 4> cand;
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) {
              cand[static_cast<std::size_t>(i)] = g.edges_between(w[static_cast<std::size_t>(i)],
                                                                  w[static_cast<std::size_t>((i + 1) % 4)]);
              if (cand[static_cast<std::size_t>(i)].empty()) ok = false;
            }
            if (!ok) continue;
            for (int e0 : cand[0])
              for (int e1 : cand[1])
                for (int e2 : cand[2])
                  for (int e3 : cand[3]) {
                    int odd = 0;
                    for (int ei : {e0, e1, e2, e3})
                      if (g.edge(ei).parity == Parity::Odd) ++odd;
                    if (odd % 2 == 1) out.push_back({w, {e0, e1, e2, e3}});
                  }
          }
        }
  return out;
}

// Tries to split everything outside the cycle between the two attachment
// pairs; there is at most one way up to which pair hosts which side.
inline std::optional<WideSeparation> try_separation(const SignedGraph& g, const OddC4& c) {
  const int n = g.vertex_count();
  std::vector<int> cyc_pos(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < 4; ++i) cyc_pos[static_cast<std::size_t>(c.verts[static_cast<std::size_t>(i)])] = i;
  std::set<int> c4e(c.edges.begin(), c.edges.end());

  // side of every vertex: 0 unknown/cycle, 1 = G1 (pair {pos0,pos2}), 2 = G2
  std::vector<int> side(static_cast<std::size_t>(n) + 1, 0);
  auto pair_of = [&](int v) -> int {
    int p = cyc_pos[static_cast<std::size_t>(v)];
    if (p < 0) return 0;
    return (p % 2 == 0) ? 1 : 2;
  };

  // components of G minus the cycle vertices, with their attachments
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  int ncomp = 0;
  for (int r = 1; r <= n; ++r) {
    if (cyc_pos[static_cast<std::size_t>(r)] >= 0 || comp[static_cast<std::size_t>(r)] != -1) continue;
    std::vector<int> stack{r};
    comp[static_cast<std::size_t>(r)] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges()) {
        if (!e.touches(v)) continue;
        int w = e.other(v);
        if (cyc_pos[static_cast<std::size_t>(w)] >= 0) continue;
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<int> comp_side(static_cast<std::size_t>(ncomp), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (c4e.count(i)) continue;
    const Edge& e = g.edge(i);
    int pu = pair_of(e.u), pv = pair_of(e.v);
    if (pu != 0 && pv != 0) {
      if (pu != pv) return std::nullopt;  // chord between the two pairs
      continue;
    }
    // at least one end outside: the component it belongs to gets constrained
    int cid = (pu == 0) ? comp[static_cast<std::size_t>(e.u)] : comp[static_cast<std::size_t>(e.v)];
    int need = (pu == 0) ? pv : pu;
    if (need == 0) continue;  // edge inside one component
    int& cs = comp_side[static_cast<std::size_t>(cid)];
    if (cs == 0)
      cs = need;
    else if (cs != need)
      return std::nullopt;  // attaches to both pairs
  }

  WideSeparation ws;
  ws.c4_vertices = c.verts;
  ws.c4_edges = c.edges;
  for (int v = 1; v <= n; ++v) {
    if (cyc_pos[static_cast<std::size_t>(v)] >= 0) continue;
    int cs = comp_side[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    side[static_cast<std::size_t>(v)] = (cs == 0) ? 1 : cs;  // unattached components default to G1
  }
  ws.g1_vertices = {c.verts[0], c.verts[2]};
  ws.g2_vertices = {c.verts[1], c.verts[3]};
  for (int v = 1; v <= n; ++v) {
    if (side[static_cast<std::size_t>(v)] == 1) ws.g1_vertices.push_back(v);
    if (side[static_cast<std::size_t>(v)] == 2) ws.g2_vertices.push_back(v);
  }
  std::sort(ws.g1_vertices.begin(), ws.g1_vertices.end());
  std::sort(ws.g2_vertices.begin(), ws.g2_vertices.end());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (c4e.count(i)) continue;
    const Edge& e = g.edge(i);
    auto in_side = [&](const std::vector<int>& vs, int v) {
      return std::binary_search(vs.begin(), vs.end(), v);
    };
    if (in_side(ws.g1_vertices, e.u) && in_side(ws.g1_vertices, e.v))
      ws.g1_edges.push_back(i);
    else if (in_side(ws.g2_vertices, e.u) && in_side(ws.g2_vertices, e.v))
      ws.g2_edges.push_back(i);
    else
      return std::nullopt;
  }
  return ws;
}

}  // namespace detail

// Independent re-check of the definitional constraints.
inline bool validate_wide_separation(const SignedGraph& g, const WideSeparation& ws) {
  // the four edges form the claimed odd cycle
  for (int i = 0; i < 4; ++i) {
    const Edge& e = g.edge(ws.c4_edges[static_cast<std::size_t>(i)]);
    if (!e.joins(ws.c4_vertices[static_cast<std::size_t>(i)],
                 ws.c4_vertices[static_cast<std::size_t>((i + 1) % 4)]))
      return false;
  }
  std::set<int> cverts(ws.c4_vertices.begin(), ws.c4_vertices.end());
  if (cverts.size() != 4) return false;
  int odd = 0;
  for (int ei : ws.c4_edges)
    if (g.edge(ei).parity == Parity::Odd) ++odd;
  if (odd % 2 == 0) return false;

  std::set<int> v1(ws.g1_vertices.begin(), ws.g1_vertices.end());
  std::set<int> v2(ws.g2_vertices.begin(), ws.g2_vertices.end());
  for (int v : v1)
    if (v2.count(v)) return false;  // V(G1) cap V(G2) empty
  // attachments: exactly the two nonadjacent pairs
  std::set<int> a1, a2;
  for (int v : v1)
    if (cverts.count(v)) a1.insert(v);
  for (int v : v2)
    if (cverts.count(v)) a2.insert(v);
  if (a1 != std::set<int>{ws.c4_vertices[0], ws.c4_vertices[2]}) return false;
  if (a2 != std::set<int>{ws.c4_vertices[1], ws.c4_vertices[3]}) return false;
  // every vertex covered
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (!v1.count(v) && !v2.count(v) && !cverts.count(v)) return false;
  // edges: partitioned into C4, G1, G2 with endpoints inside their side
  std::vector<int> owner(static_cast<std::size_t>(g.edge_count()), 0);
  for (int ei : ws.c4_edges) owner[static_cast<std::size_t>(ei)] += 1;
  for (int ei : ws.g1_edges) {
    owner[static_cast<std::size_t>(ei)] += 1;
    if (!v1.count(g.edge(ei).u) || !v1.count(g.edge(ei).v)) return false;
  }
  for (int ei : ws.g2_edges) {
    owner[static_cast<std::size_t>(ei)] += 1;
    if (!v2.count(g.edge(ei).u) || !v2.count(g.edge(ei).v)) return false;
  }
  for (int i = 0; i < g.edge_count(); ++i)
    if (owner[static_cast<std::size_t>(i)] != 1) return false;
  return true;
}

// All wide separations, one per odd 4-cycle that admits one, in deterministic
// cycle order.
inline std::vector<WideSeparation> find_wide_separations(const SignedGraph& g) {
  std::vector<WideSeparation> out;
  for (const auto& c : detail::odd_4_cycles(g)) {
    auto ws = detail::try_separation(g, c);
    if (ws && validate_wide_separation(g, *ws)) out.push_back(std::move(*ws));
  }
  return out;
}

inline std::optional<WideSeparation> find_wide_separation(const SignedGraph& g) {
  for (const auto& c : detail::odd_4_cycles(g)) {
    auto ws = detail::try_separation(g, c);
    if (ws && validate_wide_separation(g, *ws)) return ws;
  }
  return std::nullopt;
}

// True iff the side is a path with exactly two edges between its attachments
// (the K2,3-separation lemma's shape for one side).
inline bool side_is_two_edge_path(const SignedGraph& g, const std::vector<int>& side_vertices,
                                  const std::vector<int>& side_edges, int att_a, int att_b) {
  if (side_edges.size() != 2 || side_vertices.size() != 3) return false;
  int mid = -1;
  for (int v : side_vertices)
    if (v != att_a && v != att_b) mid = v;
  if (mid < 0) return false;
  bool a_mid = false, b_mid = false;
  for (int ei : side_edges) {
    const Edge& e = g.edge(ei);
    if (e.joins(att_a, mid)) a_mid = true;
    if (e.joins(att_b, mid)) b_mid = true;
  }
  return a_mid && b_mid;
}

}  // namespace signedlab
