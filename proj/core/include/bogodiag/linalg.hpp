#pragma once

#include "bogodiag/types.hpp"

namespace bogodiag {

double maxabs(const cmat& a);
bool all_finite(const cmat& a);

/// max-entry deviation from A = A^H
double hermiticity_defect(const cmat& a);
/// max-entry deviation from A = A^T
double symmetry_defect(const cmat& a);

cmat hermitize(const cmat& a);
cmat symmetrize_t(const cmat& a);

/// largest singular value
double operator_norm(const cmat& a);
inline double hs_norm(const cmat& a) { return a.norm(); }

/// eigenvalues of a Hermitian matrix, ascending
rvec hermitian_eigenvalues(const cmat& a);

// Matrix powers of Hermitian positive (semi)definite matrices via
// eigendecomposition. Eigenvalues below -psd_clamp*scale reject; values in
// [-psd_clamp*scale, 0] clamp to 0.
cmat hermitian_sqrt(const cmat& a, double psd_clamp = defaults::psd_clamp);
cmat hermitian_inv_sqrt(const cmat& a, double cond_max = defaults::cond_max,
                        double psd_clamp = defaults::psd_clamp);

/// a = w * diag(d) * w^T with w unitary and d >= 0 descending
struct TakagiResult {
  cmat w;
  rvec d;
};
TakagiResult takagi(const cmat& symmetric, double residual_tol = 1e-8);

}  // namespace bogodiag
