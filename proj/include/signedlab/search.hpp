#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "signedlab/matrix.hpp"
#include "signedlab/sap.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

struct SearchOptions {
  int iterations = 60;           // alternating steps per restart
  int sweeps = 3;                // coordinate sweeps per A-update
  double rank_tol = MatrixLabOptions().rank_tol;
  double margin = MatrixLabOptions().membership_margin;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline Eigen::MatrixXd random_member(const SignedGraph& g, std::mt19937_64& rng) {
  const int n = g.vertex_count();
  std::uniform_real_distribution<double> mag(0.2, 1.0), sym(-1.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i <= n; ++i) {
    a(i - 1, i - 1) = sym(rng);
    for (int j = i + 1; j <= n; ++j) {
      double v = 0.0;
      switch (pair_class(g, i, j)) {
        case PairClass::PureEven: v = -mag(rng); break;
        case PairClass::PureOdd: v = mag(rng); break;
        case PairClass::Mixed: v = sym(rng); break;
        case PairClass::None: v = 0.0; break;
      }
      a(i - 1, j - 1) = a(j - 1, i - 1) = v;
    }
  }
  return a;
}

// Minimize ||A Z||_F^2 over the free magnitudes of A by coordinate descent,
// clamping sign-constrained entries at the membership margin.
inline void update_matrix(Eigen::MatrixXd& a, const Eigen::MatrixXd& z, const SignedGraph& g,
                          double margin, int sweeps) {
  const int n = static_cast<int>(a.rows());
  for (int s = 0; s < sweeps; ++s) {
    Eigen::MatrixXd az = a * z;  // rows: (AZ)_i
    for (int i = 1; i <= n; ++i) {
      // diagonal
      {
        Eigen::RowVectorXd zi = z.row(i - 1);
        double d = zi.squaredNorm();
        if (d > 1e-14) {
          Eigen::RowVectorXd rest = az.row(i - 1) - a(i - 1, i - 1) * zi;
          double v = -rest.dot(zi) / d;
          az.row(i - 1) = rest + v * zi;
          a(i - 1, i - 1) = v;
        }
      }
      for (int j = i + 1; j <= n; ++j) {
        PairClass pc = pair_class(g, i, j);
        if (pc == PairClass::None) continue;
        Eigen::RowVectorXd zi = z.row(i - 1), zj = z.row(j - 1);
        double d = zi.squaredNorm() + zj.squaredNorm();
        if (d <= 1e-14) continue;
        double old = a(i - 1, j - 1);
        Eigen::RowVectorXd rest_i = az.row(i - 1) - old * zj;
        Eigen::RowVectorXd rest_j = az.row(j - 1) - old * zi;
        double v = -(rest_i.dot(zj) + rest_j.dot(zi)) / d;
        if (pc == PairClass::PureEven) v = std::min(v, -margin);
        if (pc == PairClass::PureOdd) v = std::max(v, margin);
        a(i - 1, j - 1) = a(j - 1, i - 1) = v;
        az.row(i - 1) = rest_i + v * zj;
        az.row(j - 1) = rest_j + v * zi;
      }
    }
  }
}

inline Eigen::MatrixXd lowest_eigvecs(const Eigen::MatrixXd& a, int k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const int n = static_cast<int>(a.rows());
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    return std::abs(es.eigenvalues()(x)) < std::abs(es.eigenvalues()(y));
  });
  Eigen::MatrixXd z(n, k);
  for (int c = 0; c < k; ++c) z.col(c) = es.eigenvectors().col(idx[static_cast<std::size_t>(c)]);
  return z;
}

}  // namespace detail

// Randomized lower-bound engine for M(G,Sigma): alternate between re-fitting
// the free entries against a trial kernel frame and re-extracting the k
// lowest eigenvectors. Exhaustion of the restart budget is evidence, never a
// proof of an upper bound.
inline std::optional<NullityCertificate> max_nullity_search(const SignedGraph& g, int k, int budget,
                                                            std::uint64_t seed,
                                                            const SearchOptions& opts = {}) {
  const int n = g.vertex_count();
  if (k > n) return std::nullopt;

  auto accept = [&](const Eigen::MatrixXd& a, int restart) -> std::optional<NullityCertificate> {
    if (!validate_membership(a, g, opts.margin)) return std::nullopt;
    NullityCertificate cert = nullity_certificate(a, opts.rank_tol);
    if (cert.nullity < k) return std::nullopt;
    cert.seed = seed;
    cert.restart = restart;
    if (!verify_certificate(cert)) return std::nullopt;
    return cert;
  };

  // the zero matrix is a legitimate member when no pair is sign-constrained
  {
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);
    if (auto cert = accept(zero, -1)) return cert;
  }

  for (int restart = 0; restart < budget; ++restart) {
    std::mt19937_64 rng(detail::splitmix64(seed ^ (0x5851f42d4c957f2dull * (restart + 1))));
    Eigen::MatrixXd a = detail::random_member(g, rng);
    for (int it = 0; it < opts.iterations; ++it) {
      Eigen::MatrixXd z = detail::lowest_eigvecs(a, k);
      detail::update_matrix(a, z, g, opts.margin, opts.sweeps);
      double scale = a.cwiseAbs().maxCoeff();
      if (scale > 0) a /= scale;
      if (auto cert = accept(a, restart)) return cert;
    }
  }
  return std::nullopt;
}

// As max_nullity_search, with the Strong Arnold Property as an extra
// acceptance condition.
inline std::optional<std::pair<NullityCertificate, SapReport>> xi_search(
    const SignedGraph& g, int k, int budget, std::uint64_t seed, const SearchOptions& opts = {}) {
  const int n = g.vertex_count();
  if (k > n) return std::nullopt;

  auto accept = [&](const Eigen::MatrixXd& a,
                    int restart) -> std::optional<std::pair<NullityCertificate, SapReport>> {
    if (!validate_membership(a, g, opts.margin)) return std::nullopt;
    NullityCertificate cert = nullity_certificate(a, opts.rank_tol);
    if (cert.nullity < k) return std::nullopt;
    SapReport sap = sap_check(a, g, opts.rank_tol, opts.margin);
    if (sap.dimension != 0) return std::nullopt;
    cert.seed = seed;
    cert.restart = restart;
    if (!verify_certificate(cert)) return std::nullopt;
    return std::pair{cert, sap};
  };

  {
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);
    if (auto res = accept(zero, -1)) return res;
  }

  for (int restart = 0; restart < budget; ++restart) {
    std::mt19937_64 rng(detail::splitmix64(seed ^ (0x5851f42d4c957f2dull * (restart + 1))));
    Eigen::MatrixXd a = detail::random_member(g, rng);
    for (int it = 0; it < opts.iterations; ++it) {
      Eigen::MatrixXd z = detail::lowest_eigvecs(a, k);
      detail::update_matrix(a, z, g, opts.margin, opts.sweeps);
      double scale = a.cwiseAbs().maxCoeff();
      if (scale > 0) a /= scale;
      if (auto res = accept(a, restart)) return res;
    }
  }
  return std::nullopt;
}

}  // namespace signedlab
