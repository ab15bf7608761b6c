#pragma once

#include "bogodiag/types.hpp"

namespace bogodiag {

// Problem data (h, k): h Hermitian positive definite (one-body energies),
// k complex symmetric (pairing). Construct through validate_hamiltonian.
struct QuadraticHamiltonian {
  index_t n = 0;
  cmat h;
  cmat k;
};

// The 2n x 2n block operator [[h, k], [conj(k), conj(h)]] on the doubled
// space, together with the fixed structure maps S = diag(I, -I) and the
// conjugate-swap J. Hermiticity and J-invariance are verified at build time.
struct BlockOperator {
  index_t n = 0;
  cmat a;
};

struct ConditionReport {
  double norm_g = 0.0;      // operator norm of G
  double hs_g = 0.0;        // Hilbert-Schmidt norm of G
  double hs_kh_half = 0.0;  // HS norm of conj(k) h^{-1/2}
  double lower_bound = 0.0; // -1/2 Tr(k h^{-1} k^*), always <= 0
  bool diagonalizable = false;
  bool implementable = false;
  bool bounded_below = false;
};

/// Symmetrize raw input and enforce the type invariants.
QuadraticHamiltonian validate_hamiltonian(const cmat& h_raw, const cmat& k_raw,
                                          double tol_sym = defaults::sym_tol);

BlockOperator build_block_operator(const QuadraticHamiltonian& q);

/// Condition operator G = h^{-1/2} k conj(h)^{-1/2} (complex symmetric).
cmat condition_matrix(const QuadraticHamiltonian& q, double cond_max = defaults::cond_max);

ConditionReport classify(const QuadraticHamiltonian& q,
                         double tol_gap = defaults::gap_tol,
                         double cond_max = defaults::cond_max);

/// Two-mode (p, -p) pair sector of the 1947 superfluidity model:
/// h = (p^2 + rho*vhat) I, k = rho*vhat [[0,1],[1,0]].
QuadraticHamiltonian bogoliubov_1947_pair(double p, double rho, double vhat);

/// S = diag(I_n, -I_n) on the doubled space.
cmat s_matrix(index_t n);
/// Conjugate-swap applied to a matrix: J M J = Sigma conj(M) Sigma.
cmat j_conjugate(const cmat& m);

}  // namespace bogodiag
