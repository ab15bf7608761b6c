#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bogodiag/diagonalizer.hpp"
#include "bogodiag/fock.hpp"
#include "bogodiag/types.hpp"

namespace bogodiag {

using TimeMatrix = std::function<cmat(double)>;

// Time-dependent quadratic generator: h(t) Hermitian, K2(t) symmetric,
// structure-checked at every evaluation.
struct DynamicsProblem {
  index_t n = 0;
  TimeMatrix h_of_t;
  TimeMatrix k2_of_t;
  double horizon = 0.0;
  double dt = 0.0;
};

struct TrajectoryMonitors {
  double norm_x = 0.0;       // ||gamma + gamma^2 - alpha alpha^H||_F
  double norm_y = 0.0;       // ||gamma alpha - alpha gamma^T||_F
  double herm_defect = 0.0;  // pre-correction hermiticity defect of gamma
  double symm_defect = 0.0;  // pre-correction symmetry defect of alpha
  double tr_gamma = 0.0;
  double energy = 0.0;       // Re Tr(h gamma) + Re Tr(K2^H alpha)
};

struct Trajectory {
  std::vector<double> times;
  std::vector<QuasiFreeState> states;
  std::vector<TrajectoryMonitors> monitors;
};

/// Fixed-step RK4 on i dγ/dt = h γ - γ h + K ᾱ - α K̄,
///                   i dα/dt = h α + α h^T + K + K γ^T + γ K,
/// with re-hermitization/re-symmetrization per step (defects recorded).
Trajectory evolve(const DynamicsProblem& p, const QuasiFreeState& s0);

/// X = γ + γ² - α α^H and Y = γ α - α γ^T; both vanish exactly on pure
/// quasi-free states.
std::pair<cmat, cmat> purity_witnesses(const QuasiFreeState& s);

/// Dense truncated-Fock propagation by midpoint-sampled exponentials,
/// density matrices extracted per grid step. `substeps` subdivides each
/// grid step for the propagator only.
Trajectory oracle_evolve(const DynamicsProblem& p, const TruncatedFock& f, const cvec& psi0,
                         int substeps = 1);

}  // namespace bogodiag
