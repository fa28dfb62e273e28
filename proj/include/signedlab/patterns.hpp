#pragma once

#include <string>
#include <vector>

#include "signedlab/signed_graph.hpp"

namespace signedlab {
namespace patterns {

inline SignedGraph complete(int n, Parity p) {
  std::vector<Edge> es;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) es.emplace_back(a, b, p);
  return SignedGraph(n, std::move(es));
}

inline SignedGraph k_n_e(int n) { return complete(n, Parity::Even); }
inline SignedGraph k_n_o(int n) { return complete(n, Parity::Odd); }

// K4 with exactly one odd edge.
inline SignedGraph k4i() {
  std::vector<Edge> es{{1, 2, Parity::Odd},  {1, 3, Parity::Even}, {1, 4, Parity::Even},
                       {2, 3, Parity::Even}, {2, 4, Parity::Even}, {3, 4, Parity::Even}};
  return SignedGraph(4, std::move(es));
}

// K2,3 with parts {1,2} and {3,4,5}.
inline SignedGraph k23(Parity first_edge) {
  std::vector<Edge> es;
  for (int a : {1, 2})
    for (int b : {3, 4, 5}) es.emplace_back(a, b, Parity::Even);
  es[0].parity = first_edge;  // edge (1,3)
  return SignedGraph(5, std::move(es));
}

inline SignedGraph k23e() { return k23(Parity::Even); }
inline SignedGraph k23i() { return k23(Parity::Odd); }

// Two vertices joined by one even and one odd edge.
inline SignedGraph k2eq() {
  std::vector<Edge> es{{1, 2, Parity::Even}, {1, 2, Parity::Odd}};
  return SignedGraph(2, std::move(es));
}

// Triangle with every pair joined by one even and one odd edge (6 edges).
inline SignedGraph k3eq() {
  std::vector<Edge> es;
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b) {
      es.emplace_back(a, b, Parity::Even);
      es.emplace_back(a, b, Parity::Odd);
    }
  return SignedGraph(3, std::move(es));
}

// Four-wheel: rim 1-2-3-4, hub 5. The odd edges are the nonadjacent rim pair
// {23, 14}; spokes are even.
inline SignedGraph w4o() {
  std::vector<Edge> es{{1, 2, Parity::Even}, {2, 3, Parity::Odd},  {3, 4, Parity::Even},
                       {1, 4, Parity::Odd},  {1, 5, Parity::Even}, {2, 5, Parity::Even},
                       {3, 5, Parity::Even}, {4, 5, Parity::Even}};
  return SignedGraph(5, std::move(es));
}

// All-even four-wheel shape (for unsigned-minor tests).
inline SignedGraph w4_shape() {
  std::vector<Edge> es{{1, 2, Parity::Even}, {2, 3, Parity::Even}, {3, 4, Parity::Even},
                       {1, 4, Parity::Even}, {1, 5, Parity::Even}, {2, 5, Parity::Even},
                       {3, 5, Parity::Even}, {4, 5, Parity::Even}};
  return SignedGraph(5, std::move(es));
}

// Prism (complement of C6): triangles 123 and 456 plus the matching 14,25,36.
inline SignedGraph prism() {
  std::vector<Edge> es{{1, 2, Parity::Even}, {1, 3, Parity::Even}, {2, 3, Parity::Even},
                       {4, 5, Parity::Even}, {4, 6, Parity::Even}, {5, 6, Parity::Even},
                       {1, 4, Parity::Even}, {2, 5, Parity::Even}, {3, 6, Parity::Even}};
  return SignedGraph(6, std::move(es));
}

inline SignedGraph k33() {
  std::vector<Edge> es;
  for (int a : {1, 2, 3})
    for (int b : {4, 5, 6}) es.emplace_back(a, b, Parity::Even);
  return SignedGraph(6, std::move(es));
}

inline SignedGraph path(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(v, v + 1, Parity::Even);
  return SignedGraph(n, std::move(es));
}

inline SignedGraph cycle(int n, int odd_edges = 0) {
  std::vector<Edge> es;
  for (int v = 1; v <= n; ++v)
    es.emplace_back(v, v % n + 1, v <= odd_edges ? Parity::Odd : Parity::Even);
  return SignedGraph(n, std::move(es));
}

inline SignedGraph by_name(const std::string& name) {
  if (name == "K4e") return k_n_e(4);
  if (name == "K4o") return k_n_o(4);
  if (name == "K4i") return k4i();
  if (name == "K23e") return k23e();
  if (name == "K23i") return k23i();
  if (name == "K2eq") return k2eq();
  if (name == "K3eq") return k3eq();
  if (name == "W4o") return w4o();
  if (name == "W4") return w4_shape();
  if (name == "prism") return prism();
  if (name == "K33") return k33();
  if (name.size() == 3 && name[0] == 'K' && (name[2] == 'e' || name[2] == 'o')) {
    int n = name[1] - '0';
    if (n >= 2 && n <= 8) return name[2] == 'e' ? k_n_e(n) : k_n_o(n);
  }
  throw std::invalid_argument("unknown pattern name: " + name);
}

}  // namespace patterns
}  // namespace signedlab
