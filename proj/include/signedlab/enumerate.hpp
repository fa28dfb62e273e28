#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "signedlab/canonical.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

struct EnumerationSpec {
  int n_max = 6;
  int e_max = 12;
  int max_parallel = 2;  // one even + one odd per pair suffices for every predicate here
  bool require_two_connected = true;
};

namespace detail {

// Simple 2-connected (when required) skeletons on exactly n labeled vertices,
// one representative per isomorphism class, in deterministic order.
inline std::vector<std::vector<std::pair<int, int>>> skeletons(int n, int e_max,
                                                               bool two_connected) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (n <= 0 || n == 1) {
    if (!two_connected && n == 1) out.push_back({});
    return out;
  }
  std::vector<std::pair<int, int>> all_pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) all_pairs.push_back({a, b});
  const int np = static_cast<int>(all_pairs.size());
  if (np > 21) throw size_guard_error("skeleton enumeration limited to 7 vertices");
  std::unordered_set<std::string> seen;
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    if (std::popcount(mask) > e_max) continue;
    std::vector<Edge> es;
    for (int i = 0; i < np; ++i)
      if (mask >> i & 1) es.emplace_back(all_pairs[static_cast<std::size_t>(i)].first,
                                         all_pairs[static_cast<std::size_t>(i)].second, Parity::Even);
    SignedGraph g(n, es);
    if (two_connected) {
      if (n >= 3 && !is_two_connected(g)) continue;
      if (n == 2 && es.empty()) continue;  // the pair must be present (multiplicity set later)
    }
    if (!seen.insert(canonical_key(g)).second) continue;
    std::vector<std::pair<int, int>> sk;
    for (const Edge& e : es) sk.push_back({e.u, e.v});
    out.push_back(std::move(sk));
  }
  return out;
}

}  // namespace detail

// All signed multigraphs meeting the spec, deduplicated up to isomorphism +
// sign-equivalence, in a deterministic order.
inline std::vector<SignedGraph> enumerate_classes(const EnumerationSpec& spec) {
  if (spec.n_max > 8) throw size_guard_error("enumeration limited to n_max <= 8");
  if (spec.max_parallel < 1 || spec.max_parallel > 2)
    throw size_guard_error("enumeration supports max_parallel in {1, 2}");
  std::vector<SignedGraph> out;

  // per-pair states: (even count, odd count)
  std::vector<std::pair<int, int>> states{{1, 0}, {0, 1}};
  if (spec.max_parallel == 2) {
    states.push_back({2, 0});
    states.push_back({0, 2});
    states.push_back({1, 1});
  }

  for (int n = 1; n <= spec.n_max; ++n) {
    for (const auto& sk : detail::skeletons(n, spec.e_max, spec.require_two_connected)) {
      std::unordered_set<std::string> seen;
      std::vector<int> choice(sk.size(), 0);
      std::vector<Edge> edges;
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == sk.size()) {
          SignedGraph g(n, edges);
          if (spec.require_two_connected && !is_two_connected(g)) return;
          if (seen.insert(canonical_key(g)).second) out.push_back(g);
          return;
        }
        for (const auto& [ce, co] : states) {
          int add = ce + co;
          if (used + add > spec.e_max) continue;
          for (int t = 0; t < ce; ++t) edges.emplace_back(sk[i].first, sk[i].second, Parity::Even);
          for (int t = 0; t < co; ++t) edges.emplace_back(sk[i].first, sk[i].second, Parity::Odd);
          rec(i + 1, used + add);
          for (int t = 0; t < add; ++t) edges.pop_back();
        }
      };
      rec(0, 0);
    }
  }
  return out;
}

}  // namespace signedlab
