#pragma once

#include <Eigen/Dense>
#include <vector>

#include "signedlab/matrix.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

// The Strong Arnold Property check: X symmetric, zero on the diagonal and on
// adjacent pairs, with AX = 0. SAP holds iff only X = 0 qualifies; dimension
// is the solution space dimension and witnesses span it.
struct SapReport {
  int dimension = 0;
  std::vector<Eigen::MatrixXd> witnesses;
  double tol = 0.0;
};

inline SapReport sap_check(const Eigen::MatrixXd& a, const SignedGraph& g,
                           double tol = MatrixLabOptions().rank_tol,
                           double margin = MatrixLabOptions().membership_margin) {
  if (!validate_membership(a, g, margin))
    throw std::invalid_argument("sap_check: matrix is not a member of S(G,Sigma)");
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pair_class(g, i, j) == PairClass::None) free_pairs.push_back({i, j});
  SapReport rep;
  rep.tol = tol;
  if (free_pairs.empty()) return rep;

  // column f = vec(A (E_ij + E_ji)): column j picks up A's column i and vice versa
  const int nf = static_cast<int>(free_pairs.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n * n, nf);
  for (int f = 0; f < nf; ++f) {
    auto [i, j] = free_pairs[static_cast<std::size_t>(f)];
    for (int r = 0; r < n; ++r) {
      m(r * n + (j - 1), f) += a(r, i - 1);
      m(r * n + (i - 1), f) += a(r, j - 1);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (smax > 0 && sv(i) > tol * smax) ++rank;
  rep.dimension = nf - rank;
  for (int c = rank; c < nf; ++c) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int f = 0; f < nf; ++f) {
      auto [i, j] = free_pairs[static_cast<std::size_t>(f)];
      x(i - 1, j - 1) = x(j - 1, i - 1) = svd.matrixV()(f, c);
    }
    rep.witnesses.push_back(std::move(x));
  }
  return rep;
}

// Re-check a claimed witness: support only on nonadjacent pairs, symmetric,
// and AX ~ 0 relative to ||A|| ||X||.
inline bool verify_sap_witness(const Eigen::MatrixXd& a, const SignedGraph& g,
                               const Eigen::MatrixXd& x, double tol) {
  const int n = g.vertex_count();
  if (x.rows() != n || x.cols() != n) return false;
  if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-10) return false;
  for (int i = 1; i <= n; ++i) {
    if (std::abs(x(i - 1, i - 1)) > 1e-12) return false;
    for (int j = i + 1; j <= n; ++j)
      if (pair_class(g, i, j) != PairClass::None && std::abs(x(i - 1, j - 1)) > 1e-12) return false;
  }
  double denom = a.operatorNorm() * x.operatorNorm();
  if (denom == 0.0) return true;
  return (a * x).cwiseAbs().maxCoeff() <= 100 * tol * denom;
}

}  // namespace signedlab
