#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "signedlab/signed_graph.hpp"

namespace signedlab {

struct CanonicalOptions {
  int max_n = 8;  // brute force over vertex permutations; hard bound
};

namespace detail {

// Per unordered pair: copy counts by parity plus marked-copy counts (marks are
// used for side edges of sided wide 2-paths). A re-signing that separates the
// endpoints swaps the even/odd components.
struct PairData {
  std::uint8_t ce = 0, co = 0, me = 0, mo = 0;

  PairData flipped() const { return PairData{co, ce, mo, me}; }
  bool constraining() const { return ce != co || me != mo; }
  bool empty() const { return ce == 0 && co == 0; }
  std::uint32_t packed() const {
    return std::uint32_t(ce) | std::uint32_t(co) << 8 | std::uint32_t(me) << 16 |
           std::uint32_t(mo) << 24;
  }
  std::uint32_t flip_invariant_code() const {
    return std::min(packed(), flipped().packed());
  }
  bool less_than(const PairData& o) const { return packed() < o.packed(); }
};

using PairMatrix = std::vector<PairData>;  // (n+1)*(n+1), symmetric, diagonal unused

inline PairMatrix pair_matrix(const SignedGraph& g, const std::vector<int>& marked_edges) {
  const int n = g.vertex_count();
  PairMatrix pd(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1));
  std::vector<char> marked(static_cast<std::size_t>(g.edge_count()), 0);
  for (int i : marked_edges) {
    g.edge(i);
    marked[static_cast<std::size_t>(i)] = 1;
  }
  auto at = [&](int a, int b) -> PairData& {
    return pd[static_cast<std::size_t>(a) * static_cast<std::size_t>(n + 1) +
              static_cast<std::size_t>(b)];
  };
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    PairData& d = at(e.lo(), e.hi());
    if (e.parity == Parity::Even) {
      ++d.ce;
      if (marked[static_cast<std::size_t>(i)]) ++d.me;
    } else {
      ++d.co;
      if (marked[static_cast<std::size_t>(i)]) ++d.mo;
    }
    at(e.hi(), e.lo()) = d;
  }
  return pd;
}

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Re-signing-invariant vertex invariant with one WL-style refinement round.
inline std::vector<std::uint64_t> vertex_invariants(const PairMatrix& pd, int n) {
  auto at = [&](int a, int b) -> const PairData& {
    return pd[static_cast<std::size_t>(a) * static_cast<std::size_t>(n + 1) +
              static_cast<std::size_t>(b)];
  };
  std::vector<std::uint64_t> inv0(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<std::uint32_t> codes;
    for (int u = 1; u <= n; ++u)
      if (u != v && !at(v, u).empty()) codes.push_back(at(v, u).flip_invariant_code());
    std::sort(codes.begin(), codes.end());
    std::uint64_t h = 0x12345;
    for (auto c : codes) h = mix64(h, c);
    inv0[static_cast<std::size_t>(v)] = h;
  }
  std::vector<std::uint64_t> inv1(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<std::uint64_t> codes;
    for (int u = 1; u <= n; ++u)
      if (u != v && !at(v, u).empty())
        codes.push_back(mix64(at(v, u).flip_invariant_code(), inv0[static_cast<std::size_t>(u)]));
    std::sort(codes.begin(), codes.end());
    std::uint64_t h = inv0[static_cast<std::size_t>(v)];
    for (auto c : codes) h = mix64(h, c);
    inv1[static_cast<std::size_t>(v)] = h;
  }
  return inv1;
}

// Serializes one labeling: re-sign so that, along a BFS forest of the
// constraining pairs, every forest pair takes its lexicographically smaller
// form. The residual re-signing freedom (flips constant on constraining
// components) cannot change any recorded pair, so the result is unique.
inline void serialize_labeling(const PairMatrix& pd, int n, const std::vector<int>& perm,
                               bool with_marks, std::string& out) {
  auto src = [&](int a, int b) -> const PairData& {
    return pd[static_cast<std::size_t>(a) * static_cast<std::size_t>(n + 1) +
              static_cast<std::size_t>(b)];
  };
  // newPair[x][y] for new labels x,y = data of old pair
  std::array<std::array<PairData, 9>, 9> np{};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const PairData& d = src(a, b);
      int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
      np[static_cast<std::size_t>(std::min(x, y))][static_cast<std::size_t>(std::max(x, y))] = d;
    }
  std::array<int, 9> z{};
  std::array<char, 9> vis{};
  for (int root = 1; root <= n; ++root) {
    if (vis[static_cast<std::size_t>(root)]) continue;
    vis[static_cast<std::size_t>(root)] = 1;
    z[static_cast<std::size_t>(root)] = 0;
    std::array<int, 9> queue{};
    int qh = 0, qt = 0;
    queue[static_cast<std::size_t>(qt++)] = root;
    while (qh < qt) {
      int v = queue[static_cast<std::size_t>(qh++)];
      for (int w = 1; w <= n; ++w) {
        if (vis[static_cast<std::size_t>(w)]) continue;
        const PairData& d = np[static_cast<std::size_t>(std::min(v, w))][static_cast<std::size_t>(std::max(v, w))];
        if (!d.constraining()) continue;
        // the recorded state of (v,w) only depends on z[v]^z[w]; pick z[w]
        // so the forest pair takes its smaller form
        z[static_cast<std::size_t>(w)] = d.less_than(d.flipped())
                                             ? z[static_cast<std::size_t>(v)]
                                             : (z[static_cast<std::size_t>(v)] ^ 1);
        vis[static_cast<std::size_t>(w)] = 1;
        queue[static_cast<std::size_t>(qt++)] = w;
      }
    }
  }
  out.clear();
  out.push_back(with_marks ? 'S' : 'P');
  out.push_back(static_cast<char>(n));
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      PairData d = np[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if ((z[static_cast<std::size_t>(x)] ^ z[static_cast<std::size_t>(y)]) != 0) d = d.flipped();
      out.push_back(static_cast<char>(d.ce));
      out.push_back(static_cast<char>(d.co));
      if (with_marks) {
        out.push_back(static_cast<char>(d.me));
        out.push_back(static_cast<char>(d.mo));
      }
    }
}

}  // namespace detail

// Equal keys iff the signed graphs are related by a vertex relabeling composed
// with a re-signing (marked edges, when given, must correspond as well).
inline std::string canonical_key(const SignedGraph& g, const std::vector<int>& marked_edges = {},
                                 const CanonicalOptions& opts = {}) {
  const int n = g.vertex_count();
  if (n > opts.max_n) throw size_guard_error("canonical_key limited to n <= " + std::to_string(opts.max_n));
  const bool with_marks = !marked_edges.empty();
  detail::PairMatrix pd = detail::pair_matrix(g, marked_edges);
  if (n == 0) {
    std::string out(1, with_marks ? 'S' : 'P');
    out.push_back('\0');
    return out;
  }

  auto inv = detail::vertex_invariants(pd, n);
  // Vertices grouped by invariant; candidate permutations respect the groups.
  std::vector<int> order;
  for (int v = 1; v <= n; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(inv[static_cast<std::size_t>(a)], a) < std::pair(inv[static_cast<std::size_t>(b)], b);
  });
  std::vector<std::pair<int, int>> blocks;  // [start, end) into order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                        inv[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])
      ++j;
    blocks.push_back({i, j});
    i = j;
  }

  std::string best, cur;
  std::vector<int> perm(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> block_vertices;
  for (auto [s, e] : blocks)
    block_vertices.emplace_back(order.begin() + s, order.begin() + e);

  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == block_vertices.size()) {
      detail::serialize_labeling(pd, n, perm, with_marks, cur);
      if (best.empty() || cur < best) best = cur;
      return;
    }
    auto& vs = block_vertices[bi];
    std::sort(vs.begin(), vs.end());
    const int start = blocks[bi].first;
    do {
      for (std::size_t k = 0; k < vs.size(); ++k)
        perm[static_cast<std::size_t>(vs[k])] = start + static_cast<int>(k) + 1;
      rec(bi + 1);
    } while (std::next_permutation(vs.begin(), vs.end()));
  };
  rec(0);
  return best;
}

inline std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

inline std::string canonical_key_hex(const SignedGraph& g, const std::vector<int>& marked_edges = {},
                                     const CanonicalOptions& opts = {}) {
  return to_hex(canonical_key(g, marked_edges, opts));
}

}  // namespace signedlab
