#include <catch2/catch_amalgamated.hpp>

#include "signedlab/fixtures.hpp"
#include "signedlab/matrix.hpp"
#include "signedlab/sap.hpp"
#include "signedlab/search.hpp"
#include "support.hpp"

using namespace signedlab;
using testsupport::Rng;

TEST_CASE("membership checks") {
  Eigen::MatrixXd mj3 = -Eigen::MatrixXd::Ones(3, 3);
  REQUIRE(validate_membership(mj3, patterns::k_n_e(3)));

  REQUIRE(validate_membership(Eigen::MatrixXd::Zero(2, 2), patterns::k2eq()));

  SignedGraph k2(2, {{1, 2, Parity::Even}});
  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 1, 0;
  REQUIRE_FALSE(validate_membership(bad, k2));

  REQUIRE_THROWS_AS(validate_membership(Eigen::MatrixXd::Zero(3, 3), k2), std::invalid_argument);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, -1, 0;
  REQUIRE_THROWS_AS(validate_membership(asym, k2), std::invalid_argument);

  // zero matrix is not a member when a pair is sign-constrained
  REQUIRE_FALSE(validate_membership(Eigen::MatrixXd::Zero(2, 2), k2));
}

TEST_CASE("nullity with tolerances") {
  Eigen::MatrixXd mj4 = -Eigen::MatrixXd::Ones(4, 4);
  auto cert = nullity_certificate(mj4);
  REQUIRE(cert.nullity == 3);
  REQUIRE(verify_certificate(cert));

  Eigen::Vector3d d(1, 2, 3);
  REQUIRE(nullity(Eigen::MatrixXd(d.asDiagonal())) == 0);
  REQUIRE(nullity(Eigen::MatrixXd::Zero(3, 3)) == 3);
}

TEST_CASE("SAP dimensions") {
  for (int n = 2; n <= 6; ++n) {
    Eigen::MatrixXd a = -Eigen::MatrixXd::Ones(n, n);
    auto rep = sap_check(a, patterns::k_n_e(n));
    REQUIRE(rep.dimension == 0);
  }
  REQUIRE(sap_check(Eigen::MatrixXd::Zero(2, 2), patterns::k2eq()).dimension == 0);

  // two disjoint mixed 2-cycles, zero matrix: the four cross pairs are free
  SignedGraph two_k2eq(4, {{1, 2, Parity::Even}, {1, 2, Parity::Odd},
                           {3, 4, Parity::Even}, {3, 4, Parity::Odd}});
  auto rep = sap_check(Eigen::MatrixXd::Zero(4, 4), two_k2eq);
  REQUIRE(rep.dimension == 4);
  for (const auto& w : rep.witnesses)
    REQUIRE(verify_sap_witness(Eigen::MatrixXd::Zero(4, 4), two_k2eq, w, rep.tol));

  REQUIRE_THROWS_AS(sap_check(Eigen::MatrixXd::Zero(3, 3), patterns::k_n_e(3)),
                    std::invalid_argument);
}

TEST_CASE("fixtures verified by exact rank") {
  for (const auto& name : fixture_names()) {
    Fixture f = fixture_matrix(name);
    INFO(name);
    REQUIRE(exact_nullity(f.matrix) == f.expected_nullity);
    REQUIRE(validate_membership(to_eigen(f.matrix), f.graph));
  }
}

TEST_CASE("rational parsing and Bareiss rank") {
  REQUIRE(parse_rational("3/4") == Rational(3, 4));
  REQUIRE(parse_rational("-5") == Rational(-5));
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);

  RationalMatrix m(3, 3);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  m.at(2, 2) = 5;
  // rows 0,1 proportional
  REQUIRE(exact_rank(m) == 2);
  REQUIRE(rational_to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("searches find the known lower bounds") {
  auto k23 = max_nullity_search(patterns::k23e(), 3, 300, 0);
  REQUIRE(k23.has_value());
  REQUIRE(k23->nullity >= 3);
  REQUIRE(verify_certificate(*k23));
  REQUIRE(validate_membership(k23->a, patterns::k23e()));

  // all pairs mixed: the zero matrix is the certificate
  auto k3eq = xi_search(patterns::k3eq(), 3, 10, 0);
  REQUIRE(k3eq.has_value());
  REQUIRE(k3eq->second.dimension == 0);

  auto k4e = xi_search(patterns::k_n_e(4), 3, 1000, 0);
  REQUIRE(k4e.has_value());

  // xi success implies an M certificate at the same level
  auto m4 = max_nullity_search(patterns::k_n_e(4), 3, 1000, 0);
  REQUIRE(m4.has_value());
}

TEST_CASE("searches exhaust on the M=2 graphs (smoke budget)") {
  REQUIRE_FALSE(max_nullity_search(patterns::w4o(), 3, 150, 0).has_value());
  REQUIRE_FALSE(max_nullity_search(patterns::k4i(), 3, 150, 0).has_value());
  REQUIRE_FALSE(max_nullity_search(patterns::path(4), 2, 150, 0).has_value());
}

TEST_CASE("diagonal similarity pairs with re-signing") {
  Rng rng(57);
  for (const auto& name : {"K4i", "W4o", "K23i"}) {
    Fixture f = fixture_matrix(name);
    Eigen::MatrixXd a = to_eigen(f.matrix);
    for (int it = 0; it < 25; ++it) {
      auto u = testsupport::random_vertex_subset(rng, f.graph);
      Eigen::MatrixXd dad = diagonal_similarity(a, u, f.graph.vertex_count());
      SignedGraph gu = resign(f.graph, u);
      REQUIRE(validate_membership(dad, gu) == validate_membership(a, f.graph));
      REQUIRE(nullity(dad) == nullity(a));
      REQUIRE(sap_check(dad, gu).dimension == sap_check(a, f.graph).dimension);
    }
  }
}

TEST_CASE("search determinism") {
  auto a = max_nullity_search(patterns::k23e(), 3, 300, 7);
  auto b = max_nullity_search(patterns::k23e(), 3, 300, 7);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  REQUIRE(a->restart == b->restart);
  REQUIRE((a->a - b->a).cwiseAbs().maxCoeff() == 0.0);
}
