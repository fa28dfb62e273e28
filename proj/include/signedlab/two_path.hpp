#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "signedlab/minor.hpp"
#include "signedlab/patterns.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

namespace detail {

inline std::optional<std::vector<int>> hamiltonian_cycle(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n < 3) return std::nullopt;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n) + 1,
                                     std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (const Edge& e : g.edges())
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  std::vector<int> path{1};
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  used[1] = 1;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(path.size()) == n)
      return adj[static_cast<std::size_t>(path.back())][1] != 0;
    for (int v = 2; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)] ||
          !adj[static_cast<std::size_t>(path.back())][static_cast<std::size_t>(v)])
        continue;
      used[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      if (rec()) return true;
      path.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return path;
}

struct PolygonTriangulation {
  std::vector<std::pair<int, int>> chords;   // position pairs, lo < hi
  std::vector<std::array<int, 3>> faces;
};

// All triangulations of the convex region given by `region` (positions in
// circular order), appended to out with faces recorded.
inline void polygon_triangulations(const std::vector<int>& region,
                                   std::vector<PolygonTriangulation>& out) {
  const std::size_t k = region.size();
  if (k < 3) {
    out.push_back({});
    return;
  }
  if (k == 3) {
    PolygonTriangulation t;
    t.faces.push_back({region[0], region[1], region[2]});
    out.push_back(std::move(t));
    return;
  }
  for (std::size_t m = 1; m + 1 < k; ++m) {
    std::vector<int> left(region.begin(), region.begin() + static_cast<long>(m) + 1);
    std::vector<int> right(region.begin() + static_cast<long>(m), region.end());
    std::vector<PolygonTriangulation> louts, routs;
    polygon_triangulations(left, louts);
    polygon_triangulations(right, routs);
    for (const auto& lo : louts)
      for (const auto& ro : routs) {
        PolygonTriangulation t;
        t.faces.push_back({region[0], region[m], region[k - 1]});
        if (m >= 2) t.chords.push_back({std::min(region[0], region[m]), std::max(region[0], region[m])});
        if (m + 2 < k)
          t.chords.push_back({std::min(region[m], region[k - 1]), std::max(region[m], region[k - 1])});
        t.chords.insert(t.chords.end(), lo.chords.begin(), lo.chords.end());
        t.chords.insert(t.chords.end(), ro.chords.begin(), ro.chords.end());
        t.faces.insert(t.faces.end(), lo.faces.begin(), lo.faces.end());
        t.faces.insert(t.faces.end(), ro.faces.begin(), ro.faces.end());
        out.push_back(std::move(t));
      }
  }
}

inline bool face_tree_is_path(const PolygonTriangulation& t) {
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < t.faces.size(); ++j) {
      if (i == j) continue;
      int shared = 0;
      for (int x : t.faces[i])
        for (int y : t.faces[j])
          if (x == y) ++shared;
      if (shared == 2) ++deg;
    }
    if (deg > 2) return false;
  }
  return true;
}

}  // namespace detail

// Partial 2-path test for 2-connected simple graphs, via the outerplanarity
// route: no K4 / K2,3 shape minor, then some triangulation of the outer
// polygon refining the existing chords must have a path as its face tree.
inline bool is_partial_2_path(const SignedGraph& g) {
  for (const auto& [pr, ps] : parallel_classes(g).pairs)
    if (ps.size() > 1) throw std::invalid_argument("is_partial_2_path expects a simple graph");
  if (!is_two_connected(g)) throw std::invalid_argument("is_partial_2_path expects a 2-connected graph");
  const int n = g.vertex_count();
  if (n == 3) return true;

  if (has_unsigned_minor(g, patterns::k_n_e(4))) return false;
  if (has_unsigned_minor(g, patterns::k23e())) return false;

  auto ham = detail::hamiltonian_cycle(g);
  if (!ham) return false;  // 2-connected outerplanar graphs are Hamiltonian
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>((*ham)[static_cast<std::size_t>(i)])] = i;

  std::set<std::pair<int, int>> given;
  for (const Edge& e : g.edges()) {
    int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
    if ((a + 1) % n == b || (b + 1) % n == a) continue;  // cycle edge
    given.insert({std::min(a, b), std::max(a, b)});
  }

  std::vector<int> region;
  for (int i = 0; i < n; ++i) region.push_back(i);
  std::vector<detail::PolygonTriangulation> tris;
  detail::polygon_triangulations(region, tris);

  for (const auto& t : tris) {
    std::set<std::pair<int, int>> cs(t.chords.begin(), t.chords.end());
    bool refines = true;
    for (const auto& c : given)
      if (!cs.count(c)) {
        refines = false;
        break;
      }
    if (refines && detail::face_tree_is_path(t)) return true;
  }
  return false;
}

}  // namespace signedlab
