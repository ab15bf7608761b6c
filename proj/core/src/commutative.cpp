#include "bogodiag/commutative.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"

namespace bogodiag {

void validate_commutative(const CommutativeInstance& c) {
  if (c.h_diag.size() == 0 || c.h_diag.size() != c.k_diag.size())
    throw_input("DimensionMismatch", "h_diag and k_diag must have equal nonzero length");
  for (index_t i = 0; i < c.h_diag.size(); ++i) {
    if (c.h_diag(i) <= 0.0)
      throw_input("NotPositiveDefinite", "h_diag entries must be positive");
    if (std::abs(c.k_diag(i)) >= c.h_diag(i))
      throw_input("OutOfRegime", "|k_i| >= h_i at mode " + std::to_string(i));
  }
}

QuadraticHamiltonian to_hamiltonian(const CommutativeInstance& c) {
  cmat h = c.h_diag.cast<complexd>().asDiagonal();
  cmat k = c.k_diag.cast<complexd>().asDiagonal();
  return validate_hamiltonian(h, k);
}

ClosedFormDiagonalization closed_form_diagonalize(const CommutativeInstance& c) {
  validate_commutative(c);
  const index_t n = c.h_diag.size();

  ClosedFormDiagonalization out;
  out.v_full = cmat::Zero(2 * n, 2 * n);
  out.xi_diag.resize(n);
  out.norm_v = 0.0;
  for (index_t i = 0; i < n; ++i) {
    const double g = c.k_diag(i) / c.h_diag(i);
    const double root = std::sqrt(1.0 - g * g);
    const double s = std::sqrt(0.5 + 0.5 / root);
    const double o = -g / (1.0 + root);
    out.v_full(i, i) = s;
    out.v_full(i, n + i) = s * o;
    out.v_full(n + i, i) = s * o;
    out.v_full(n + i, n + i) = s;
    out.xi_diag(i) = std::sqrt(c.h_diag(i) * c.h_diag(i) - c.k_diag(i) * c.k_diag(i));
    out.norm_v = std::max(out.norm_v, s * (1.0 + std::abs(o)));
  }
  return out;
}

double oracle_compare(const CommutativeInstance& c) {
  validate_commutative(c);
  const index_t n = c.h_diag.size();

  ClosedFormDiagonalization cf = closed_form_diagonalize(c);
  QuadraticHamiltonian q = to_hamiltonian(c);
  DiagonalizationResult dr = diagonalize(q);

  // closed-form gauge-invariant data
  cmat u_cf = cf.v_full.topLeftCorner(n, n);
  cmat v_cf = cf.v_full.bottomLeftCorner(n, n);
  cmat gamma_cf = v_cf.adjoint() * v_cf;
  cmat alpha_cf = u_cf.adjoint() * v_cf.conjugate();
  rvec xi_cf = cf.xi_diag;
  std::sort(xi_cf.begin(), xi_cf.end());
  double e_cf = 0.5 * (cf.xi_diag.sum() - c.h_diag.sum());
  double vhs_cf = v_cf.norm();

  auto [gs, e_num] = ground_state_data(q, dr.transform);

  double dev = 0.0;
  dev = std::max(dev, (dr.xi_eigs - xi_cf).cwiseAbs().maxCoeff());
  dev = std::max(dev, maxabs(gs.gamma - gamma_cf));
  dev = std::max(dev, maxabs(gs.alpha - alpha_cf));
  dev = std::max(dev, std::abs(e_num - e_cf));
  dev = std::max(dev, std::abs(operator_norm(dr.transform.full) - cf.norm_v));
  dev = std::max(dev, std::abs(hs_norm(dr.transform.v) - vhs_cf));
  return dev;
}

}  // namespace bogodiag
