#include "bogodiag/quadratic_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"

namespace bogodiag {

QuadraticHamiltonian validate_hamiltonian(const cmat& h_raw, const cmat& k_raw, double tol_sym) {
  if (h_raw.rows() == 0 || h_raw.rows() != h_raw.cols())
    throw_input("DimensionMismatch", "h must be square and nonempty");
  if (k_raw.rows() != h_raw.rows() || k_raw.cols() != h_raw.cols())
    throw_input("DimensionMismatch", "k must match the shape of h");
  if (!all_finite(h_raw) || !all_finite(k_raw))
    throw_input("InvalidParameter", "matrix entries must be finite");

  const double h_scale = std::max(maxabs(h_raw), 1e-300);
  if (hermiticity_defect(h_raw) > tol_sym * h_scale)
    throw_input("NotHermitian", "h deviates from h^H beyond tolerance");

  QuadraticHamiltonian q;
  q.n = h_raw.rows();
  q.h = hermitize(h_raw);
  q.k = symmetrize_t(k_raw);  // leaves the Hamiltonian unchanged

  rvec ev = hermitian_eigenvalues(q.h);
  if (ev(0) <= 0.0)
    throw_input("NotPositiveDefinite",
                "smallest eigenvalue of h is " + std::to_string(ev(0)));
  return q;
}

cmat s_matrix(index_t n) {
  cmat s = cmat::Identity(2 * n, 2 * n);
  s.bottomRightCorner(n, n) = -cmat::Identity(n, n);
  return s;
}

cmat j_conjugate(const cmat& m) {
  const index_t n = m.rows() / 2;
  cmat sw = cmat::Zero(2 * n, 2 * n);
  sw.topRightCorner(n, n) = cmat::Identity(n, n);
  sw.bottomLeftCorner(n, n) = cmat::Identity(n, n);
  return sw * m.conjugate() * sw;
}

BlockOperator build_block_operator(const QuadraticHamiltonian& q) {
  const index_t n = q.n;
  BlockOperator blk;
  blk.n = n;
  blk.a.resize(2 * n, 2 * n);
  blk.a.topLeftCorner(n, n) = q.h;
  blk.a.topRightCorner(n, n) = q.k;
  blk.a.bottomLeftCorner(n, n) = q.k.conjugate();
  blk.a.bottomRightCorner(n, n) = q.h.conjugate();

  const double scale = std::max(maxabs(blk.a), 1e-300);
  if (hermiticity_defect(blk.a) > defaults::sym_tol * scale)
    throw_numeric("NotHermitian", "block operator lost hermiticity");
  if (maxabs(j_conjugate(blk.a) - blk.a) > defaults::sym_tol * scale)
    throw_numeric("NotJInvariant", "block operator is not conjugate-swap invariant");
  return blk;
}

cmat condition_matrix(const QuadraticHamiltonian& q, double cond_max) {
  cmat ih = hermitian_inv_sqrt(q.h, cond_max);
  return ih * q.k * ih.conjugate();
}

ConditionReport classify(const QuadraticHamiltonian& q, double tol_gap, double cond_max) {
  ConditionReport rep;
  cmat ih = hermitian_inv_sqrt(q.h, cond_max);
  cmat g = ih * q.k * ih.conjugate();
  rep.norm_g = operator_norm(g);
  rep.hs_g = hs_norm(g);
  rep.hs_kh_half = hs_norm(cmat(q.k.conjugate() * ih));
  rep.lower_bound = -0.5 * rep.hs_kh_half * rep.hs_kh_half;
  rep.diagonalizable = rep.norm_g < 1.0 - tol_gap;
  rep.implementable = std::isfinite(rep.hs_g);
  rep.bounded_below = std::isfinite(rep.hs_kh_half);
  return rep;
}

QuadraticHamiltonian bogoliubov_1947_pair(double p, double rho, double vhat) {
  if (p == 0.0) throw_input("InvalidParameter", "momentum p must be nonzero");
  if (rho <= 0.0) throw_input("InvalidParameter", "density rho must be positive");
  if (vhat < 0.0) throw_input("InvalidParameter", "interaction coefficient vhat must be nonnegative");

  const double rv = rho * vhat;
  cmat h = (p * p + rv) * cmat::Identity(2, 2);
  cmat k = cmat::Zero(2, 2);
  k(0, 1) = rv;
  k(1, 0) = rv;
  return validate_hamiltonian(h, k);
}

}  // namespace bogodiag
