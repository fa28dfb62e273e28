#include <catch2/catch_amalgamated.hpp>

#include "signedlab/cycles.hpp"
#include "signedlab/minor.hpp"
#include "signedlab/patterns.hpp"
#include "support.hpp"

using namespace signedlab;
using testsupport::Rng;

TEST_CASE("identity embeddings") {
  for (const auto& g : {patterns::k4i(), patterns::w4o(), patterns::k3eq(), patterns::k23i()}) {
    auto w = has_weak_minor(g, g);
    REQUIRE(w.has_value());
    REQUIRE(validate_embedding(g, g, *w));
    auto s = has_minor(g, g);
    REQUIRE(s.has_value());
    REQUIRE(validate_embedding(g, g, *s));
  }
}

TEST_CASE("K2eq inside odd cycles") {
  // contracting an edge of an odd cycle keeps the cycle odd, down to the odd
  // 2-cycle; the exhaustive strict search agrees
  SignedGraph odd_tri(3, {{1, 2, Parity::Odd}, {1, 3, Parity::Even}, {2, 3, Parity::Even}});
  auto s = has_minor(odd_tri, patterns::k2eq());
  REQUIRE(s.has_value());
  REQUIRE(validate_embedding(odd_tri, patterns::k2eq(), *s));

  SignedGraph c4_odd = patterns::cycle(4, 1);
  auto s4 = has_minor(c4_odd, patterns::k2eq());
  REQUIRE(s4.has_value());

  // strict contractions preserve cycle parities, so an even cycle has no K2eq
  // minor; a weak (plain) contraction of an odd edge flips the cycle and
  // reaches it anyway
  REQUIRE_FALSE(has_minor(patterns::cycle(4, 0), patterns::k2eq()).has_value());
  REQUIRE_FALSE(has_minor(patterns::cycle(4, 2), patterns::k2eq()).has_value());
  REQUIRE(has_weak_minor(patterns::cycle(4, 2), patterns::k2eq()).has_value());
  REQUIRE(has_weak_minor(patterns::k_n_e(3), patterns::k2eq()).has_value());

  // an even parallel pair flips as a unit: no K2eq anywhere
  SignedGraph even2(2, {{1, 2, Parity::Even}, {1, 2, Parity::Even}});
  REQUIRE_FALSE(has_weak_minor(even2, patterns::k2eq()).has_value());
}

TEST_CASE("K4i has no K3eq minor") {
  REQUIRE_FALSE(has_weak_minor(patterns::k4i(), patterns::k3eq()).has_value());
  REQUIRE_FALSE(has_minor(patterns::k4i(), patterns::k3eq()).has_value());
}

TEST_CASE("W4o plus a chord has a weak K4o or K4e minor") {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (auto [a, b] : {std::pair{1, 3}, std::pair{2, 4}}) {
      std::vector<Edge> es = patterns::w4o().edges();
      es.emplace_back(a, b, p);
      SignedGraph host(5, es);
      bool k4o = has_weak_minor(host, patterns::k_n_o(4)).has_value();
      bool k4e = has_weak_minor(host, patterns::k_n_e(4)).has_value();
      REQUIRE((k4o || k4e));
    }
  }
}

TEST_CASE("forbidden_check on the named graphs") {
  auto k4e = forbidden_check(patterns::k_n_e(4));
  REQUIRE(k4e.entries[1].strict.has_value());

  auto w4 = forbidden_check(patterns::w4o());
  REQUIRE_FALSE(w4.any_strict());
  REQUIRE_FALSE(w4.any_weak());

  auto k23 = forbidden_check(patterns::k23e());
  REQUIRE(k23.entries[3].strict.has_value());

  auto k4i = forbidden_check(patterns::k4i());
  REQUIRE_FALSE(k4i.any_weak());
}

TEST_CASE("strict implies weak and both are re-signing invariant") {
  Rng rng(23);
  const auto pats = std::array{patterns::k2eq(), patterns::k_n_e(3), patterns::k_n_o(3)};
  for (int it = 0; it < 60; ++it) {
    SignedGraph g = testsupport::random_signed_graph(rng, 2, 5, 0.6, 0.25);
    for (const auto& p : pats) {
      auto s = has_minor(g, p);
      auto w = has_weak_minor(g, p);
      if (s.has_value()) REQUIRE(w.has_value());
      auto u = testsupport::random_vertex_subset(rng, g);
      REQUIRE(has_weak_minor(resign(g, u), p).has_value() == w.has_value());
    }
  }
}

TEST_CASE("monotonicity under adding an edge") {
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    SignedGraph g = testsupport::random_signed_graph(rng, 3, 5, 0.5, 0.1);
    auto p = patterns::k_n_e(3);
    if (!has_weak_minor(g, p).has_value()) continue;
    int a = testsupport::rand_int(rng, 1, g.vertex_count());
    int b = testsupport::rand_int(rng, 1, g.vertex_count());
    if (a == b) continue;
    std::vector<Edge> es = g.edges();
    es.emplace_back(a, b, testsupport::rand_bool(rng) ? Parity::Odd : Parity::Even);
    REQUIRE(has_weak_minor(SignedGraph(g.vertex_count(), es), p).has_value());
  }
}

TEST_CASE("w4 signature classification") {
  auto cls = w4_signature_classify(patterns::w4o());
  REQUIRE(cls.sign_equiv_w4o);
  REQUIRE(cls.odd_triangles == 2);

  auto all_even = w4_signature_classify(patterns::w4_shape());
  REQUIRE(all_even.forbidden == "K4e");
  REQUIRE(all_even.witness.has_value());

  // all eight edges odd: every hub triangle is odd; the strict route to K4o is
  // blocked (contracting a rim edge keeps the lifted 4-cycles even) but K23e
  // shows up as an all-even-able subgraph
  std::vector<Edge> es = patterns::w4_shape().edges();
  for (Edge& e : es) e.parity = Parity::Odd;
  SignedGraph all_odd_host(5, es);
  auto all_odd = w4_signature_classify(all_odd_host);
  REQUIRE(all_odd.odd_triangles == 4);
  REQUIRE(all_odd.forbidden == "K23e");
  REQUIRE(all_odd.witness.has_value());
  REQUIRE_FALSE(has_minor(all_odd_host, patterns::k_n_o(4)).has_value());
  // ... while the parity-flipping weak contraction does reach K4o
  REQUIRE(has_weak_minor(all_odd_host, patterns::k_n_o(4)).has_value());

  // two odd triangles sharing a spoke -> K23e
  std::vector<Edge> es2 = patterns::w4_shape().edges();
  es2[0].parity = Parity::Odd;  // rim 12
  es2[1].parity = Parity::Odd;  // rim 23
  auto share = w4_signature_classify(SignedGraph(5, es2));
  REQUIRE(share.forbidden == "K23e");

  REQUIRE_THROWS_AS(w4_signature_classify(patterns::k4i()), std::invalid_argument);
}

TEST_CASE("unsigned minors ignore parities") {
  REQUIRE(has_unsigned_minor(patterns::w4o(), patterns::k_n_e(4)));
  REQUIRE_FALSE(has_unsigned_minor(patterns::cycle(5), patterns::k_n_e(4)));
  // K2,3 shape sits inside W4 (drop two opposite spokes)
  REQUIRE(has_unsigned_minor(patterns::w4_shape(), patterns::k23e()));
}

TEST_CASE("size guards") {
  SignedGraph big(13, {});
  REQUIRE_THROWS_AS(has_weak_minor(big, patterns::k2eq()), size_guard_error);
}
