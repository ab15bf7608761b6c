#pragma once

#include <vector>

#include "bogodiag/diagonalizer.hpp"
#include "bogodiag/dynamics.hpp"
#include "bogodiag/types.hpp"

namespace bogodiag {

// Symmetric exponential generator of a pure quasi-free state.
struct PairingGenerator {
  index_t n = 0;
  cmat kgen;
};

/// Transform generated by kgen: Takagi kgen = W D W^T gives
/// U = W cosh(2D) W^H and V = conj(W) sinh(2D) W^H, which sum the interleaved
/// cosh/sinh power series in closed form.
BogoliubovTransform generator_to_transform(const PairingGenerator& g,
                                           double tol_sym = defaults::sym_tol);

/// Recover a generator whose transform reproduces the state data of t
/// (gamma, alpha and the singular values of V); entrywise U, V equality is
/// gauge and is not reproduced.
PairingGenerator transform_to_generator(const BogoliubovTransform& t, double tol = 1e-8);

/// Rebuild a transform from a pure state: requires ||X|| + ||Y|| <= purity_tol.
BogoliubovTransform state_to_transform(const QuasiFreeState& s, double purity_tol = 1e-8);

struct ResidualSample {
  double t = 0.0;
  double res_gamma = 0.0;
  double res_alpha = 0.0;
};

/// Interior finite-difference residuals of the evolution equations along a
/// trajectory; for a valid trajectory they decay at second order in dt, and
/// they vanish identically exactly when the trajectory solves the equations.
std::vector<ResidualSample> tddiag_residual(const Trajectory& traj, const DynamicsProblem& p);

}  // namespace bogodiag
