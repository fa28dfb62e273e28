#include <catch2/catch_amalgamated.hpp>

#include "signedlab/canonical.hpp"
#include "signedlab/cycles.hpp"
#include "signedlab/patterns.hpp"
#include "signedlab/signed_graph.hpp"
#include "support.hpp"

using namespace signedlab;
using testsupport::Rng;

TEST_CASE("resign flips exactly the cut") {
  SignedGraph g(2, {{1, 2, Parity::Odd}});
  SignedGraph h = resign(g, {1});
  REQUIRE(h.edge(0).parity == Parity::Even);

  SignedGraph w = patterns::w4o();
  REQUIRE(resign(w, std::vector<int>{}) == w);

  SECTION("out of range vertex") {
    REQUIRE_THROWS_AS(resign(g, {3}), std::out_of_range);
  }
}

TEST_CASE("resign is an involution and preserves odd cycles") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    SignedGraph g = testsupport::random_signed_graph(rng);
    auto u = testsupport::random_vertex_subset(rng, g);
    REQUIRE(resign(resign(g, u), u) == g);
    REQUIRE(odd_cycle_fingerprint(resign(g, u)) == odd_cycle_fingerprint(g));
  }
  // the spec's named instance: re-signing W4o on a rim vertex
  SignedGraph w = patterns::w4o();
  REQUIRE(odd_cycle_fingerprint(resign(w, {1})) == odd_cycle_fingerprint(w));
}

TEST_CASE("odd cycle fingerprint on small graphs") {
  SignedGraph tri(3, {{1, 2, Parity::Odd}, {1, 3, Parity::Even}, {2, 3, Parity::Even}});
  auto fp = odd_cycle_fingerprint(tri);
  REQUIRE(fp == std::set<std::vector<int>>{{0, 1, 2}});

  SignedGraph c4(4, {{1, 2, Parity::Odd}, {2, 3, Parity::Even}, {3, 4, Parity::Odd}, {1, 4, Parity::Even}});
  REQUIRE(odd_cycle_fingerprint(c4).empty());

  SignedGraph k2(2, {{1, 2, Parity::Even}, {1, 2, Parity::Odd}});
  REQUIRE(odd_cycle_fingerprint(k2) == std::set<std::vector<int>>{{0, 1}});
}

TEST_CASE("sign equivalence by cut 2-coloring") {
  SignedGraph tri(3, {{1, 2, Parity::Odd}, {1, 3, Parity::Even}, {2, 3, Parity::Even}});
  // sigma2 = {edge 1} = {13}; edges 12 and 13 share vertex 1
  auto w = sign_equivalence_witness(tri, {1});
  REQUIRE(w.has_value());
  // the witness really re-signs g into sigma2
  SignedGraph h = resign(tri, *w);
  REQUIRE(h.edge(0).parity == Parity::Even);
  REQUIRE(h.edge(1).parity == Parity::Odd);
  REQUIRE(h.edge(2).parity == Parity::Even);

  SignedGraph c4(4, {{1, 2, Parity::Even}, {2, 3, Parity::Even}, {3, 4, Parity::Even}, {1, 4, Parity::Even}});
  REQUIRE_FALSE(is_sign_equivalent(c4, {0}));

  auto self = sign_equivalence_witness(tri, {0});
  REQUIRE(self.has_value());
  REQUIRE(self->u_set.empty());

  REQUIRE_THROWS_AS(is_sign_equivalent(tri, {9}), std::out_of_range);
}

TEST_CASE("sign equivalence agrees with fingerprint equality on samples") {
  Rng rng(11);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    SignedGraph g = testsupport::random_signed_graph(rng, 2, 6);
    if (g.edge_count() > 9) continue;
    ++checked;
    // random alternative signature
    std::vector<int> sigma2;
    std::vector<Edge> es2 = g.edges();
    for (int i = 0; i < g.edge_count(); ++i) {
      bool odd = testsupport::rand_bool(rng);
      es2[static_cast<std::size_t>(i)].parity = odd ? Parity::Odd : Parity::Even;
      if (odd) sigma2.push_back(i);
    }
    SignedGraph g2(g.vertex_count(), es2);
    bool equiv = is_sign_equivalent(g, sigma2);
    bool same_fp = odd_cycle_fingerprint(g) == odd_cycle_fingerprint(g2);
    REQUIRE(equiv == same_fp);
  }
  REQUIRE(checked > 100);
}

TEST_CASE("deletions and contractions") {
  // contracting one even edge of an even 2-cycle leaves a single vertex
  SignedGraph c2(2, {{1, 2, Parity::Even}, {1, 2, Parity::Even}});
  SignedGraph pt = contract_even(c2, 0);
  REQUIRE(pt.vertex_count() == 1);
  REQUIRE(pt.edge_count() == 0);

  REQUIRE_THROWS_AS(contract_even(SignedGraph(2, {{1, 2, Parity::Odd}}), 0), std::invalid_argument);

  // weak contraction of the odd edge of K4^i: 3 vertices, two mixed parallel
  // pairs and one even edge
  SignedGraph k = patterns::k4i();
  SignedGraph m = contract_weak(k, 0);
  REQUIRE(m.vertex_count() == 3);
  REQUIRE(m.edge_count() == 5);
  auto cls = parallel_classes(m);
  int mixed = 0, single_even = 0;
  for (const auto& [pr, ps] : cls.pairs) {
    if (ps.size() == 2 && ps[0] != ps[1]) ++mixed;
    if (ps.size() == 1 && ps[0] == Parity::Even) ++single_even;
  }
  REQUIRE(mixed == 2);
  REQUIRE(single_even == 1);

  // deleting a spoke of W4o keeps 5 vertices and 7 edges
  SignedGraph w = patterns::w4o();
  SignedGraph wd = delete_edge(w, 4);
  REQUIRE(wd.vertex_count() == 5);
  REQUIRE(wd.edge_count() == 7);

  // contract_weak on an odd edge equals resign-at-lower-end + contract_even
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    SignedGraph g = testsupport::random_signed_graph(rng);
    for (int i = 0; i < g.edge_count(); ++i) {
      if (g.edge(i).parity != Parity::Odd) continue;
      REQUIRE(contract_weak(g, i) == contract_even(resign(g, {g.edge(i).lo()}), i));
      break;
    }
  }
}

TEST_CASE("reduce_parallel_classes") {
  SignedGraph g3(2, {{1, 2, Parity::Even}, {1, 2, Parity::Even}, {1, 2, Parity::Even}});
  auto [r3, u3] = reduce_parallel_classes(g3);
  REQUIRE(u3);
  REQUIRE(r3.edge_count() == 1);

  SignedGraph mix(2, {{1, 2, Parity::Even}, {1, 2, Parity::Odd}});
  auto [rm, um] = reduce_parallel_classes(mix);
  REQUIRE_FALSE(um);
  REQUIRE(rm.edge_count() == 2);

  SignedGraph w = patterns::w4o();
  std::vector<Edge> we = w.edges();
  we.emplace_back(1, 2, Parity::Even);  // double an even rim edge
  auto [rw, uw] = reduce_parallel_classes(SignedGraph(5, we));
  REQUIRE(uw);
  REQUIRE(canonical_key(rw) == canonical_key(w));
}

TEST_CASE("two-connectivity convention") {
  REQUIRE_FALSE(is_two_connected(patterns::path(3)));
  REQUIRE(is_two_connected(patterns::k_n_e(3)));
  REQUIRE(is_two_connected(SignedGraph(2, {{1, 2, Parity::Even}, {1, 2, Parity::Even}})));
  REQUIRE_FALSE(is_two_connected(SignedGraph(2, {{1, 2, Parity::Even}})));
  REQUIRE_FALSE(is_two_connected(SignedGraph(1, {})));
  // cutvertex: two triangles sharing a vertex
  SignedGraph bowtie(5, {{1, 2, Parity::Even}, {1, 3, Parity::Even}, {2, 3, Parity::Even},
                         {3, 4, Parity::Even}, {3, 5, Parity::Even}, {4, 5, Parity::Even}});
  REQUIRE_FALSE(is_two_connected(bowtie));
}

TEST_CASE("canonical keys identify iso + sign-equivalence classes") {
  SignedGraph t1(3, {{1, 2, Parity::Odd}, {1, 3, Parity::Even}, {2, 3, Parity::Even}});
  SignedGraph t2(3, {{1, 2, Parity::Even}, {1, 3, Parity::Odd}, {2, 3, Parity::Even}});
  REQUIRE(canonical_key(t1) == canonical_key(t2));

  SignedGraph c4e(4, {{1, 2, Parity::Even}, {2, 3, Parity::Even}, {3, 4, Parity::Even}, {1, 4, Parity::Even}});
  SignedGraph c4o(4, {{1, 2, Parity::Odd}, {2, 3, Parity::Even}, {3, 4, Parity::Even}, {1, 4, Parity::Even}});
  REQUIRE(canonical_key(c4e) != canonical_key(c4o));

  Rng rng(19);
  for (int it = 0; it < 200; ++it) {
    SignedGraph g = testsupport::random_signed_graph(rng);
    auto u = testsupport::random_vertex_subset(rng, g);
    auto perm = testsupport::random_permutation(rng, g.vertex_count());
    REQUIRE(canonical_key(g) == canonical_key(permute(resign(g, u), perm)));
  }

  // distinct classes stay distinct: odd triangle vs even triangle
  REQUIRE(canonical_key(t1) != canonical_key(patterns::k_n_e(3)));
  // while every odd triangle is one class
  REQUIRE(canonical_key(t1) == canonical_key(patterns::k_n_o(3)));

  REQUIRE_THROWS_AS(canonical_key(patterns::path(9)), size_guard_error);
}

TEST_CASE("M<=1 and xi<=1 shape checks") {
  SignedGraph p4 = patterns::path(4);
  REQUIRE(m_le_1_check(p4));
  REQUIRE(xi_le_1_check(p4));

  SignedGraph k2eq = patterns::k2eq();
  REQUIRE_FALSE(m_le_1_check(k2eq));
  REQUIRE_FALSE(xi_le_1_check(k2eq));

  SignedGraph two_edges(4, {{1, 2, Parity::Even}, {3, 4, Parity::Even}});
  REQUIRE_FALSE(m_le_1_check(two_edges));
  REQUIRE(xi_le_1_check(two_edges));

  // path-shaped multigraph with a uniform doubled class is still fine
  SignedGraph doubled(3, {{1, 2, Parity::Odd}, {1, 2, Parity::Odd}, {2, 3, Parity::Even}});
  REQUIRE(m_le_1_check(doubled));

  REQUIRE_FALSE(m_le_1_check(patterns::cycle(4)));
}

TEST_CASE("underlying simple graph and parallel class summary") {
  SignedGraph g(3, {{1, 2, Parity::Odd}, {1, 2, Parity::Even}, {2, 3, Parity::Odd}});
  SignedGraph s = underlying_simple(g);
  REQUIRE(s.edge_count() == 2);
  for (const Edge& e : s.edges()) REQUIRE(e.parity == Parity::Even);
  auto cls = parallel_classes(g);
  REQUIRE(cls.pairs.at({1, 2}).size() == 2);
  REQUIRE(cls.pairs.at({2, 3}).size() == 1);
}
