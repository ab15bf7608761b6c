#include "bogodiag/diagonalizer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"

namespace bogodiag {

BogoliubovTransform BogoliubovTransform::identity(index_t n) {
  return from_blocks(cmat::Identity(n, n), cmat::Zero(n, n));
}

BogoliubovTransform BogoliubovTransform::from_blocks(const cmat& u, const cmat& v, double tol) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows())
    throw_input("DimensionMismatch", "U and V must be square of equal size");
  const index_t n = u.rows();

  cmat eye = cmat::Identity(n, n);
  double r_uu = maxabs(u.adjoint() * u - eye - v.adjoint() * v);
  double r_uu_adj = maxabs(u * u.adjoint() - eye - v.conjugate() * v.transpose());
  cmat utv = u.transpose() * v;
  double r_utv = symmetry_defect(utv);
  double scale = std::max(1.0, maxabs(cmat(u.adjoint() * u)));
  if (std::max({r_uu, r_uu_adj, r_utv}) > tol * scale)
    throw_input("NotSymplectic", "U, V do not satisfy the Bogoliubov relations");

  BogoliubovTransform t;
  t.n = n;
  t.u = u;
  t.v = v;
  t.full.resize(2 * n, 2 * n);
  t.full.topLeftCorner(n, n) = u;
  t.full.topRightCorner(n, n) = v.conjugate();
  t.full.bottomLeftCorner(n, n) = v;
  t.full.bottomRightCorner(n, n) = u.conjugate();
  return t;
}

DiagonalizationResult diagonalize(const QuadraticHamiltonian& q, const DiagonalizeOptions& opt) {
  const index_t n = q.n;
  ConditionReport rep = classify(q, opt.gap_tol, opt.cond_max);
  if (!rep.diagonalizable)
    throw_input("NotDiagonalizable",
                "||G|| = " + std::to_string(rep.norm_g) + " is not below 1");

  BlockOperator blk = build_block_operator(q);
  const cmat& a = blk.a;

  cmat a_half = hermitian_sqrt(a);
  cmat a_invhalf = hermitian_inv_sqrt(a, opt.cond_max);
  cmat s = s_matrix(n);
  cmat b = hermitize(a_half * s * a_half);

  Eigen::SelfAdjointEigenSolver<cmat> es(b);
  if (es.info() != Eigen::Success)
    throw_numeric("EigensolverFailure", "eigendecomposition of A^{1/2} S A^{1/2} failed");
  const rvec& ev = es.eigenvalues();  // ascending, comes in +/- pairs
  const double b_scale = ev.cwiseAbs().maxCoeff();

  // top-n eigenvalues are the positive branch; the -lambda partners are the
  // conjugate-swap images of the +lambda eigenvectors, never re-extracted
  rvec lam(n);
  cmat w(2 * n, n);
  for (index_t i = 0; i < n; ++i) {
    lam(i) = ev(2 * n - 1 - i);  // descending
    w.col(i) = es.eigenvectors().col(2 * n - 1 - i);
    if (lam(i) <= opt.pair_tol * b_scale)
      throw_numeric("DegeneratePairing",
                    "eigenvalue of A^{1/2} S A^{1/2} too close to zero: " + std::to_string(lam(i)));
  }

  // V_full = diag(sqrt(lam), sqrt(lam)) * U_B * A^{-1/2} with U_B^H = [w | Jw]
  rvec sq = lam.cwiseSqrt();
  cmat upper = sq.asDiagonal() * (w.adjoint() * a_invhalf);           // n x 2n
  cmat jw(2 * n, n);
  jw.topRows(n) = w.bottomRows(n).conjugate();
  jw.bottomRows(n) = w.topRows(n).conjugate();
  cmat lower = sq.asDiagonal() * (jw.adjoint() * a_invhalf);          // n x 2n

  cmat u_blk = upper.leftCols(n);
  cmat v_blk = lower.leftCols(n);
  // the off blocks must already be the conjugates of (V, U)
  double struct_dev = std::max(maxabs(upper.rightCols(n) - v_blk.conjugate()),
                               maxabs(lower.rightCols(n) - u_blk.conjugate()));
  double v_scale = std::max(1.0, maxabs(u_blk));
  if (struct_dev > opt.symp_tol * v_scale)
    throw_numeric("NotJInvariant", "computed transform lost its conjugation structure");

  DiagonalizationResult res;
  res.transform = BogoliubovTransform::from_blocks(u_blk, v_blk, opt.symp_tol);

  cmat d = res.transform.full * a * res.transform.full.adjoint();
  res.xi = hermitize(d.topLeftCorner(n, n));
  res.offdiag_residual = std::sqrt(d.bottomLeftCorner(n, n).squaredNorm() +
                                   d.topRightCorner(n, n).squaredNorm());
  if (res.offdiag_residual > opt.diag_tol * a.norm())
    throw_numeric("OffDiagonalResidual",
                  "block diagonalization residual " + std::to_string(res.offdiag_residual));

  res.xi_eigs = hermitian_eigenvalues(res.xi);
  if (res.xi_eigs(0) <= 0.0)
    throw_numeric("NotPositiveDefinite", "excitation operator is not positive");

  TransformReport tr = verify_transform(res.transform, rep.norm_g, rep.hs_g);
  if (tr.slack_norm_bound < -defaults::num_tol || tr.slack_hs_bound < -defaults::num_tol)
    throw_numeric("BoundViolated", "transform norm exceeds its theoretical bound");

  res.ground_energy = ground_state_data(q, res.transform).second;
  return res;
}

TransformReport verify_transform(const BogoliubovTransform& t, double norm_g, double hs_g) {
  const index_t n = t.n;
  cmat s = s_matrix(n);
  cmat eye = cmat::Identity(n, n);

  TransformReport r;
  r.r_sv_left = maxabs(t.full.adjoint() * s * t.full - s);
  r.r_sv_right = maxabs(t.full * s * t.full.adjoint() - s);
  r.r_uu = maxabs(t.u.adjoint() * t.u - eye - t.v.adjoint() * t.v);
  r.r_uu_adj = maxabs(t.u * t.u.adjoint() - eye - t.v.conjugate() * t.v.transpose());
  r.r_utv = symmetry_defect(cmat(t.u.transpose() * t.v));
  r.max_residual = std::max({r.r_sv_left, r.r_sv_right, r.r_uu, r.r_uu_adj, r.r_utv});

  r.v_hs = hs_norm(t.v);
  r.norm_v = operator_norm(t.full);
  if (norm_g < 1.0) {
    r.slack_norm_bound = std::pow((1.0 + norm_g) / (1.0 - norm_g), 0.25) - r.norm_v;
    r.slack_hs_bound = 2.0 * hs_g / (1.0 - norm_g) - r.v_hs;
  } else {
    r.slack_norm_bound = std::numeric_limits<double>::quiet_NaN();
    r.slack_hs_bound = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

std::pair<QuasiFreeState, double> ground_state_data(const QuadraticHamiltonian& q,
                                                    const BogoliubovTransform& t) {
  if (t.n != q.n) throw_input("DimensionMismatch", "transform and instance sizes differ");
  const index_t n = q.n;

  QuasiFreeState s;
  s.n = n;
  s.gamma = hermitize(t.v.adjoint() * t.v);
  cmat alpha_raw = t.u.adjoint() * t.v.conjugate();
  double defect = symmetry_defect(alpha_raw);
  if (defect > defaults::sym_tol * std::max(1.0, maxabs(alpha_raw)) * 100.0)
    throw_numeric("NotSymmetric", "pairing density matrix asymmetric beyond tolerance");
  s.alpha = symmetrize_t(alpha_raw);

  double energy = (q.h * s.gamma).trace().real() + (q.k.adjoint() * s.alpha).trace().real();

  ConditionReport rep = classify(q);
  if (energy < rep.lower_bound - defaults::num_tol)
    throw_numeric("BoundViolated", "ground energy " + std::to_string(energy) +
                                       " below bound " + std::to_string(rep.lower_bound));
  return {s, energy};
}

cmat generalized_one_pdm(const QuasiFreeState& s) {
  const index_t n = s.n;
  cmat p(2 * n, 2 * n);
  p.topLeftCorner(n, n) = s.gamma;
  p.topRightCorner(n, n) = s.alpha;
  p.bottomLeftCorner(n, n) = s.alpha.conjugate();
  p.bottomRightCorner(n, n) = cmat::Identity(n, n) + s.gamma.conjugate();
  return p;
}

QuasiFreeState vacuum_state(index_t n) {
  return {n, cmat::Zero(n, n), cmat::Zero(n, n)};
}

void validate_state(const QuasiFreeState& s, double tol) {
  if (s.gamma.rows() != s.n || s.gamma.cols() != s.n ||
      s.alpha.rows() != s.n || s.alpha.cols() != s.n)
    throw_input("DimensionMismatch", "state matrices must be n x n");
  if (!all_finite(s.gamma) || !all_finite(s.alpha))
    throw_input("NonFiniteState", "state contains non-finite entries");
  double scale = std::max({1.0, maxabs(s.gamma), maxabs(s.alpha)});
  if (hermiticity_defect(s.gamma) > tol * scale)
    throw_input("NotHermitian", "gamma is not Hermitian");
  if (symmetry_defect(s.alpha) > tol * scale)
    throw_input("NotSymmetric", "alpha is not symmetric");
  rvec gev = hermitian_eigenvalues(s.gamma);
  if (gev(0) < -tol * scale)
    throw_input("NotPositiveDefinite", "gamma has a negative eigenvalue");
  rvec pev = hermitian_eigenvalues(generalized_one_pdm(s));
  if (pev(0) < -tol * std::max(1.0, scale))
    throw_input("NotPositiveDefinite", "generalized one-pdm has a negative eigenvalue");
}

QuasiFreeState transform_state(const BogoliubovTransform& t, const QuasiFreeState& s,
                               Direction dir) {
  if (t.n != s.n) throw_input("DimensionMismatch", "transform and state sizes differ");
  const index_t n = s.n;
  cmat p = generalized_one_pdm(s);

  // forward: congruence by V; inverse: congruence by V^{-1} = S V^H S
  cmat w;
  if (dir == Direction::forward) {
    w = t.full;
  } else {
    cmat sm = s_matrix(n);
    w = sm * t.full.adjoint() * sm;
  }
  cmat pp = w.adjoint() * p * w;

  cmat gamma = hermitize(pp.topLeftCorner(n, n));
  cmat alpha_raw = pp.topRightCorner(n, n);
  double scale = std::max(1.0, maxabs(pp));
  double dev = std::max(
      maxabs(pp.bottomRightCorner(n, n) - cmat::Identity(n, n) - gamma.conjugate()),
      maxabs(pp.bottomLeftCorner(n, n) - alpha_raw.conjugate()));
  if (dev > 1e-8 * scale)
    throw_numeric("BlockInconsistency",
                  "transported one-pdm lost its block structure (deviation " +
                      std::to_string(dev) + ")");

  QuasiFreeState out;
  out.n = n;
  out.gamma = gamma;
  out.alpha = symmetrize_t(alpha_raw);
  return out;
}

}  // namespace bogodiag
