#pragma once

#include <random>
#include <vector>

#include "signedlab/signed_graph.hpp"

namespace testsupport {

using signedlab::Edge;
using signedlab::Parity;
using signedlab::SignedGraph;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool rand_bool(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Random signed multigraph: every pair independently empty / single / doubled,
// random parities. Not necessarily connected.
inline SignedGraph random_signed_graph(Rng& rng, int min_n = 2, int max_n = 6,
                                       double edge_prob = 0.55, double double_prob = 0.2) {
  int n = rand_int(rng, min_n, max_n);
  std::vector<Edge> es;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (!rand_bool(rng, edge_prob)) continue;
      es.emplace_back(a, b, rand_bool(rng) ? Parity::Odd : Parity::Even);
      if (rand_bool(rng, double_prob))
        es.emplace_back(a, b, rand_bool(rng) ? Parity::Odd : Parity::Even);
    }
  return SignedGraph(n, std::move(es));
}

inline std::vector<int> random_vertex_subset(Rng& rng, const SignedGraph& g) {
  std::vector<int> u;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (rand_bool(rng)) u.push_back(v);
  return u;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) perm[static_cast<std::size_t>(v)] = v;
  for (int v = n; v >= 2; --v)
    std::swap(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(rand_int(rng, 1, v))]);
  return perm;
}

}  // namespace testsupport
