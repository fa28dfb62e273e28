#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace signedlab {

// Thrown when an exponential-time helper is asked to exceed its configured bound.
struct size_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity flipped(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

inline Parity parity_xor(Parity a, Parity b) {
  return (a == b) ? Parity::Even : Parity::Odd;
}

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

struct Edge {
  int u = 0;  // 1-based endpoints, u != v
  int v = 0;
  Parity parity = Parity::Even;

  Edge() = default;
  Edge(int uu, int vv, Parity p) : u(uu), v(vv), parity(p) {}

  int lo() const { return std::min(u, v); }
  int hi() const { return std::max(u, v); }
  bool joins(int a, int b) const { return (u == a && v == b) || (u == b && v == a); }
  bool touches(int a) const { return u == a || v == a; }
  int other(int a) const { return u == a ? v : u; }

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.lo() == b.lo() && a.hi() == b.hi() && a.parity == b.parity;
  }
};

// Signed multigraph on vertices 1..n. Parallel edges are permitted, loops are
// not. Edges keep stable indices (position in the edge list) so signatures and
// witnesses can name a specific copy inside a parallel class; edge list order
// carries no other meaning.
class SignedGraph {
 public:
  SignedGraph() = default;

  SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (const Edge& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
        throw std::invalid_argument("edge endpoint out of range 1..n");
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const Edge& edge(int i) const {
    if (i < 0 || i >= edge_count()) throw std::out_of_range("edge index out of range");
    return edges_[static_cast<std::size_t>(i)];
  }

  bool has_vertex(int v) const { return v >= 1 && v <= n_; }

  std::vector<int> incident_edges(int v) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
      if (edges_[static_cast<std::size_t>(i)].touches(v)) out.push_back(i);
    return out;
  }

  int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

  // Indices of all edges between a and b (every parallel copy).
  std::vector<int> edges_between(int a, int b) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
      if (edges_[static_cast<std::size_t>(i)].joins(a, b)) out.push_back(i);
    return out;
  }

  bool adjacent(int a, int b) const {
    for (const Edge& e : edges_)
      if (e.joins(a, b)) return true;
    return false;
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Re-signing set U: flipping the parity of every edge with exactly one end in U
// preserves the odd cycle set.
struct ReSigning {
  std::vector<int> u_set;
};

inline void check_vertex_subset(const SignedGraph& g, const std::vector<int>& vs) {
  for (int v : vs)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

inline SignedGraph resign(const SignedGraph& g, const ReSigning& u) {
  check_vertex_subset(g, u.u_set);
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int v : u.u_set) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Edge> es = g.edges();
  for (Edge& e : es)
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) e.parity = flipped(e.parity);
  return SignedGraph(g.vertex_count(), std::move(es));
}

inline SignedGraph resign(const SignedGraph& g, const std::vector<int>& u_set) {
  return resign(g, ReSigning{u_set});
}

// Relabels vertices by perm (perm[v] is the new label of v; 1-based, size n+1
// with slot 0 unused). Edge order is preserved so edge indices stay stable.
inline SignedGraph permute(const SignedGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count() + 1)
    throw std::invalid_argument("permutation must have size n+1 (slot 0 unused)");
  std::vector<char> seen(perm.size(), 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int w = perm[static_cast<std::size_t>(v)];
    if (w < 1 || w > g.vertex_count() || seen[static_cast<std::size_t>(w)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) {
    e.u = perm[static_cast<std::size_t>(e.u)];
    e.v = perm[static_cast<std::size_t>(e.v)];
  }
  return SignedGraph(g.vertex_count(), std::move(es));
}

inline SignedGraph delete_edge(const SignedGraph& g, int edge_index) {
  g.edge(edge_index);
  std::vector<Edge> es;
  es.reserve(g.edges().size() - 1);
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != edge_index) es.push_back(g.edge(i));
  return SignedGraph(g.vertex_count(), std::move(es));
}

// Deletes v with its incident edges; vertices above v shift down by one.
inline SignedGraph delete_vertex(const SignedGraph& g, int v) {
  if (!g.has_vertex(v)) throw std::out_of_range("vertex out of range");
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e.touches(v)) continue;
    Edge f = e;
    if (f.u > v) --f.u;
    if (f.v > v) --f.v;
    es.push_back(f);
  }
  return SignedGraph(g.vertex_count() - 1, std::move(es));
}

namespace detail {

// Contraction core: deletes the edge, identifies its ends into min(u,v),
// discards loops arising from parallel mates, shifts labels above max(u,v).
inline SignedGraph contract_impl(const SignedGraph& g, int edge_index) {
  const Edge& c = g.edge(edge_index);
  const int keep = c.lo(), gone = c.hi();
  std::vector<Edge> es;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == edge_index) continue;
    Edge f = g.edge(i);
    if (f.u == gone) f.u = keep;
    if (f.v == gone) f.v = keep;
    if (f.u == f.v) continue;  // parallel mate became a loop
    if (f.u > gone) --f.u;
    if (f.v > gone) --f.v;
    es.push_back(f);
  }
  return SignedGraph(g.vertex_count() - 1, std::move(es));
}

}  // namespace detail

// Raw contraction (delete and identify), parities of the other edges
// untouched. Contracting an odd edge this way flips the parity of every cycle
// through it.
inline SignedGraph contract_plain(const SignedGraph& g, int edge_index) {
  return detail::contract_impl(g, edge_index);
}

inline SignedGraph contract_even(const SignedGraph& g, int edge_index) {
  if (g.edge(edge_index).parity != Parity::Even)
    throw std::invalid_argument("contract_even: edge is odd");
  return detail::contract_impl(g, edge_index);
}

// Weak contraction: if the edge is odd, first re-sign on its lower endpoint to
// make it even, then contract.
inline SignedGraph contract_weak(const SignedGraph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  if (e.parity == Parity::Even) return detail::contract_impl(g, edge_index);
  SignedGraph h = resign(g, {e.lo()});
  return contract_even(h, edge_index);
}

struct ParallelClassSummary {
  // (lo, hi) -> parities of the copies, in edge-list order.
  std::map<std::pair<int, int>, std::vector<Parity>> pairs;
};

inline ParallelClassSummary parallel_classes(const SignedGraph& g) {
  ParallelClassSummary s;
  for (const Edge& e : g.edges()) s.pairs[{e.lo(), e.hi()}].push_back(e.parity);
  return s;
}

// Keeps one edge per (pair, parity) combination; uniform means every parallel
// class was single-parity.
inline std::pair<SignedGraph, bool> reduce_parallel_classes(const SignedGraph& g) {
  std::map<std::pair<int, int>, std::pair<bool, bool>> seen;  // pair -> (has even, has odd)
  bool uniform = true;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    auto& f = seen[{e.lo(), e.hi()}];
    bool& have = (e.parity == Parity::Even) ? f.first : f.second;
    if (!have) {
      have = true;
      es.emplace_back(e.lo(), e.hi(), e.parity);
    }
  }
  for (const auto& [pr, f] : seen)
    if (f.first && f.second) uniform = false;
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
    return std::tuple(a.lo(), a.hi(), a.parity) < std::tuple(b.lo(), b.hi(), b.parity);
  });
  return {SignedGraph(g.vertex_count(), std::move(es)), uniform};
}

// Collapses parallel classes and forgets parity (one even edge per adjacent pair).
inline SignedGraph underlying_simple(const SignedGraph& g) {
  std::set<std::pair<int, int>> prs;
  for (const Edge& e : g.edges()) prs.insert({e.lo(), e.hi()});
  std::vector<Edge> es;
  for (const auto& [a, b] : prs) es.emplace_back(a, b, Parity::Even);
  return SignedGraph(g.vertex_count(), std::move(es));
}

inline bool is_connected(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> vis(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack{1};
  vis[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!vis[static_cast<std::size_t>(w)]) {
        vis[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  return count == n;
}

// Multigraph convention: n >= 3 means connected with no cutvertex; the
// 2-vertex multigraph counts as 2-connected iff it has >= 2 parallel edges.
inline bool is_two_connected(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return false;
  if (n == 2) return g.edge_count() >= 2;
  if (!is_connected(g)) return false;
  for (int v = 1; v <= n; ++v)
    if (!is_connected(delete_vertex(g, v))) return false;
  return true;
}

}  // namespace signedlab
