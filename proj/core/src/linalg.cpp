#include "bogodiag/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "bogodiag/errors.hpp"

namespace bogodiag {

double maxabs(const cmat& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool all_finite(const cmat& a) { return a.allFinite(); }

double hermiticity_defect(const cmat& a) { return maxabs(a - a.adjoint()); }

double symmetry_defect(const cmat& a) { return maxabs(a - a.transpose()); }

cmat hermitize(const cmat& a) { return 0.5 * (a + a.adjoint()); }

cmat symmetrize_t(const cmat& a) { return 0.5 * (a + a.transpose()); }

double operator_norm(const cmat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<cmat> es(cmat(a.adjoint() * a), Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

rvec hermitian_eigenvalues(const cmat& a) {
  Eigen::SelfAdjointEigenSolver<cmat> es(hermitize(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

namespace {

struct HermEig {
  rvec values;
  cmat vectors;
};

HermEig herm_eig(const cmat& a) {
  Eigen::SelfAdjointEigenSolver<cmat> es(hermitize(a));
  if (es.info() != Eigen::Success)
    throw_numeric("EigensolverFailure", "Hermitian eigendecomposition did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

}  // namespace

cmat hermitian_sqrt(const cmat& a, double psd_clamp) {
  HermEig eig = herm_eig(a);
  double scale = std::max(eig.values.cwiseAbs().maxCoeff(), 1e-300);
  rvec lam = eig.values;
  for (index_t i = 0; i < lam.size(); ++i) {
    if (lam(i) < -psd_clamp * scale)
      throw_numeric("NotPositiveDefinite", "matrix has a negative eigenvalue beyond the clamp window");
    lam(i) = std::sqrt(std::max(lam(i), 0.0));
  }
  return eig.vectors * lam.asDiagonal() * eig.vectors.adjoint();
}

cmat hermitian_inv_sqrt(const cmat& a, double cond_max, double psd_clamp) {
  HermEig eig = herm_eig(a);
  double top = eig.values.maxCoeff();
  if (top <= 0.0) throw_numeric("NotPositiveDefinite", "matrix is not positive definite");
  rvec lam = eig.values;
  for (index_t i = 0; i < lam.size(); ++i) {
    if (lam(i) < -psd_clamp * top)
      throw_numeric("NotPositiveDefinite", "matrix has a negative eigenvalue beyond the clamp window");
    double v = std::max(lam(i), 0.0);
    if (v < top / cond_max)
      throw_numeric("IllConditioned", "condition number exceeds cond_max");
    lam(i) = 1.0 / std::sqrt(v);
  }
  return eig.vectors * lam.asDiagonal() * eig.vectors.adjoint();
}

namespace {

// Jointly diagonalize two commuting real symmetric matrices by a real
// orthogonal transform: cluster the first spectrum, then diagonalize the
// second within each cluster.
rmat joint_real_diagonalize(const rmat& x, const rmat& y, double cluster_tol) {
  const index_t r = x.rows();
  Eigen::SelfAdjointEigenSolver<rmat> ex(0.5 * (x + x.transpose()));
  rmat o = ex.eigenvectors();
  rvec xv = ex.eigenvalues();
  index_t pos = 0;
  while (pos < r) {
    index_t end = pos + 1;
    while (end < r && std::abs(xv(end) - xv(pos)) <= cluster_tol) ++end;
    if (end - pos > 1) {
      rmat block = o.middleCols(pos, end - pos).transpose() * y * o.middleCols(pos, end - pos);
      Eigen::SelfAdjointEigenSolver<rmat> ey(0.5 * (block + block.transpose()));
      o.middleCols(pos, end - pos) = o.middleCols(pos, end - pos) * ey.eigenvectors();
    }
    pos = end;
  }
  return o;
}

}  // namespace

TakagiResult takagi(const cmat& symmetric, double residual_tol) {
  const index_t n = symmetric.rows();
  cmat a = symmetrize_t(symmetric);
  double scale = maxabs(a);
  if (n == 0 || scale == 0.0)
    return {cmat::Identity(n, n), rvec::Zero(n)};

  // a*conj(a) = w diag(d^2) w^H for the Takagi frame w
  HermEig eig = herm_eig(cmat(a * a.conjugate()));
  // descending order
  std::vector<index_t> order(static_cast<size_t>(n));
  for (index_t i = 0; i < n; ++i) order[static_cast<size_t>(i)] = n - 1 - i;

  cmat w(n, n);
  rvec d(n);
  const double s2max = std::max(eig.values.maxCoeff(), 0.0);
  const double cluster_tol = 1e-8 * std::max(s2max, 1e-300);
  const double zero_tol = 1e-14 * std::max(s2max, 1e-300);

  index_t pos = 0;
  while (pos < n) {
    index_t end = pos + 1;
    double ref = eig.values(order[static_cast<size_t>(pos)]);
    while (end < n && std::abs(eig.values(order[static_cast<size_t>(end)]) - ref) <= cluster_tol) ++end;
    const index_t r = end - pos;
    cmat p(n, r);
    for (index_t j = 0; j < r; ++j) p.col(j) = eig.vectors.col(order[static_cast<size_t>(pos + j)]);

    if (ref <= zero_tol) {
      w.middleCols(pos, r) = p;
      d.segment(pos, r).setZero();
    } else {
      // restriction of the bilinear form; sigma times a symmetric unitary
      cmat sb = p.adjoint() * a * p.conjugate();
      rmat x = sb.real(), y = sb.imag();
      rmat o = joint_real_diagonalize(x, y, 1e-9 * std::sqrt(ref));
      cmat rot(r, r);
      rvec sig(r);
      rmat xw = o.transpose() * x * o;
      rmat yw = o.transpose() * y * o;
      for (index_t j = 0; j < r; ++j) {
        complexd mu(xw(j, j), yw(j, j));
        sig(j) = std::abs(mu);
        double phase = std::arg(mu);
        rot.col(j) = o.col(j).cast<complexd>() * std::exp(imag_unit * (phase / 2.0));
      }
      w.middleCols(pos, r) = p * rot;
      d.segment(pos, r) = sig;
    }
    pos = end;
  }

  double residual = maxabs(w * d.asDiagonal() * w.transpose() - a);
  if (residual > residual_tol * std::max(1.0, scale))
    throw_numeric("TakagiFailure", "factorization residual exceeds tolerance");
  return {w, d};
}

}  // namespace bogodiag
