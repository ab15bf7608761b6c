#pragma once

#include "bogodiag/diagonalizer.hpp"
#include "bogodiag/types.hpp"

namespace bogodiag {

// Real diagonal (h, k) with |k_i| < h_i: the multiplication-operator case
// with mode-wise closed forms, used as an independent oracle.
struct CommutativeInstance {
  rvec h_diag;
  rvec k_diag;
};

struct ClosedFormDiagonalization {
  cmat v_full;     // 2n x 2n transform
  rvec xi_diag;    // excitation energies per mode
  double norm_v;   // operator norm of v_full
};

void validate_commutative(const CommutativeInstance& c);
QuadraticHamiltonian to_hamiltonian(const CommutativeInstance& c);

/// Per mode i with g = k_i/h_i: scale s = sqrt(1/2 + 1/(2 sqrt(1-g^2))),
/// off-entry o = -g/(1 + sqrt(1-g^2)), mode block s*[[1, o], [o, 1]],
/// xi_i = sqrt(h_i^2 - k_i^2).
ClosedFormDiagonalization closed_form_diagonalize(const CommutativeInstance& c);

/// Max deviation between the generic diagonalizer and the closed form on
/// gauge-invariant outputs (xi spectrum, ground-state gamma/alpha/energy,
/// transform norms).
double oracle_compare(const CommutativeInstance& c);

}  // namespace bogodiag
