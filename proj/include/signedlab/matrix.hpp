#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "signedlab/rational.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

struct MatrixLabOptions {
  double rank_tol = 1e-9;          // relative, on the spectral scale
  double membership_margin = 1e-8; // absolute after normalizing ||A||_inf = 1
};

enum class PairClass : std::uint8_t { None, PureEven, PureOdd, Mixed };

inline PairClass pair_class(const SignedGraph& g, int i, int j) {
  bool even = false, odd = false;
  for (const Edge& e : g.edges())
    if (e.joins(i, j)) ((e.parity == Parity::Even) ? even : odd) = true;
  if (even && odd) return PairClass::Mixed;
  if (even) return PairClass::PureEven;
  if (odd) return PairClass::PureOdd;
  return PairClass::None;
}

// Membership in S(G,Sigma): negative on pure-even pairs, positive on pure-odd,
// free on mixed pairs and the diagonal, zero on nonadjacent pairs. Strict
// inequalities carry the margin eps after sup-norm normalization.
inline bool validate_membership(const Eigen::MatrixXd& a, const SignedGraph& g,
                                double eps = MatrixLabOptions().membership_margin) {
  const int n = g.vertex_count();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("matrix size does not match graph");
  double scale = a.cwiseAbs().maxCoeff();
  if (a.rows() > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale))
    throw std::invalid_argument("matrix is not symmetric");
  Eigen::MatrixXd b = (scale > 0) ? Eigen::MatrixXd(a / scale) : a;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      double v = b(i - 1, j - 1);
      switch (pair_class(g, i, j)) {
        case PairClass::PureEven:
          if (!(v <= -eps)) return false;
          break;
        case PairClass::PureOdd:
          if (!(v >= eps)) return false;
          break;
        case PairClass::Mixed:
          break;
        case PairClass::None:
          if (std::abs(v) > eps) return false;
          break;
      }
    }
  return true;
}

// A concrete matrix with its certified kernel.
struct NullityCertificate {
  Eigen::MatrixXd a;
  Eigen::MatrixXd kernel;  // orthonormal columns
  int nullity = 0;
  double residual = 0.0;   // max ||A z|| over kernel columns
  double tol = 0.0;
  std::uint64_t seed = 0;
  int restart = -1;
};

inline NullityCertificate nullity_certificate(const Eigen::MatrixXd& a,
                                              double tol = MatrixLabOptions().rank_tol) {
  const int n = static_cast<int>(a.rows());
  NullityCertificate cert;
  cert.a = a;
  cert.tol = tol;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const auto& vals = es.eigenvalues();
  double lmax = 0;
  for (int i = 0; i < n; ++i) lmax = std::max(lmax, std::abs(vals(i)));
  std::vector<int> null_idx;
  for (int i = 0; i < n; ++i)
    if (lmax == 0.0 || std::abs(vals(i)) <= tol * lmax) null_idx.push_back(i);
  cert.nullity = static_cast<int>(null_idx.size());
  cert.kernel.resize(n, cert.nullity);
  for (int c = 0; c < cert.nullity; ++c) cert.kernel.col(c) = es.eigenvectors().col(null_idx[static_cast<std::size_t>(c)]);
  if (cert.nullity > 0) cert.residual = (a * cert.kernel).colwise().norm().maxCoeff();
  return cert;
}

inline int nullity(const Eigen::MatrixXd& a, double tol = MatrixLabOptions().rank_tol) {
  return nullity_certificate(a, tol).nullity;
}

// Independent re-check: kernel orthonormal, residuals within tol * ||A||_2.
inline bool verify_certificate(const NullityCertificate& cert) {
  const int n = static_cast<int>(cert.a.rows());
  if (cert.kernel.cols() != cert.nullity || cert.kernel.rows() != n) return false;
  if (cert.nullity == 0) return true;
  Eigen::MatrixXd gram = cert.kernel.transpose() * cert.kernel;
  if ((gram - Eigen::MatrixXd::Identity(cert.nullity, cert.nullity)).cwiseAbs().maxCoeff() > 1e-8)
    return false;
  double anorm = cert.a.operatorNorm();
  double res = (cert.a * cert.kernel).colwise().norm().maxCoeff();
  return res <= std::max(cert.tol * anorm, 1e-300) || anorm == 0.0;
}

inline Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = static_cast<double>(m.at(i, j));
  return out;
}

// Diagonal +/-1 similarity matching a re-signing on U.
inline Eigen::MatrixXd diagonal_similarity(const Eigen::MatrixXd& a, const std::vector<int>& u_set,
                                           int n) {
  Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
  for (int v : u_set) d(v - 1) = -1.0;
  return d.asDiagonal() * a * d.asDiagonal();
}

}  // namespace signedlab
