#pragma once

#include <utility>

#include "bogodiag/quadratic_model.hpp"
#include "bogodiag/types.hpp"

namespace bogodiag {

// Bogoliubov transformation in block form, full = [[U, conj(V)], [V, conj(U)]].
// The assembly makes conjugate-swap invariance structural; the symplectic
// relations U^H U = 1 + V^H V, U U^H = 1 + conj(V) V^T, U^T V symmetric are
// verified on construction.
struct BogoliubovTransform {
  index_t n = 0;
  cmat u;
  cmat v;
  cmat full;

  static BogoliubovTransform identity(index_t n);
  static BogoliubovTransform from_blocks(const cmat& u, const cmat& v,
                                         double tol = defaults::symp_tol);
};

// One-particle density matrices of a (not necessarily pure) state:
// gamma_ij = <a_j^* a_i>, alpha_ij = <a_i a_j>.
struct QuasiFreeState {
  index_t n = 0;
  cmat gamma;
  cmat alpha;
};

struct DiagonalizationResult {
  BogoliubovTransform transform;
  cmat xi;                   // one-quasiparticle operator, Hermitian positive
  rvec xi_eigs;              // ascending
  double ground_energy = 0.0;
  double offdiag_residual = 0.0;
};

struct TransformReport {
  double r_sv_left = 0.0;    // V^H S V - S
  double r_sv_right = 0.0;   // V S V^H - S
  double r_uu = 0.0;         // U^H U - 1 - V^H V
  double r_uu_adj = 0.0;     // U U^H - 1 - conj(V) V^T
  double r_utv = 0.0;        // U^T V asymmetry
  double max_residual = 0.0;
  double v_hs = 0.0;         // Shale quantity ||V||_HS
  double norm_v = 0.0;       // operator norm of the full transform
  double slack_norm_bound = 0.0;  // ((1+g)/(1-g))^{1/4} - ||V_full||
  double slack_hs_bound = 0.0;    // 2 g_HS/(1-g) - ||V||_HS
};

struct DiagonalizeOptions {
  double gap_tol = defaults::gap_tol;
  double pair_tol = defaults::pair_tol;
  double symp_tol = defaults::symp_tol;
  double diag_tol = defaults::diag_tol;
  double cond_max = defaults::cond_max;
};

/// Diagonalize the block operator of q by a Bogoliubov transformation:
/// B = A^{1/2} S A^{1/2} is eigendecomposed, the +lambda eigenvectors w are
/// paired with their conjugate-swap partners, and V_full = U_B |B|^{1/2} A^{-1/2}
/// block-diagonalizes A with the excitation operator xi in the upper block.
DiagonalizationResult diagonalize(const QuadraticHamiltonian& q,
                                  const DiagonalizeOptions& opt = {});

/// Residuals of the five transform identities plus the slack of the two
/// norm bounds (nonnegative slack means the bound holds).
TransformReport verify_transform(const BogoliubovTransform& t, double norm_g, double hs_g);

/// Ground-state density matrices (V^H V, sym(U^H conj(V))) and the ground
/// energy Tr(h gamma) + Re Tr(k^H alpha).
std::pair<QuasiFreeState, double> ground_state_data(const QuadraticHamiltonian& q,
                                                    const BogoliubovTransform& t);

enum class Direction { forward, inverse };

/// Congruence transport of the generalized one-particle density matrix.
/// forward maps the state of Psi to that of U_V^* Psi; inverse undoes it.
QuasiFreeState transform_state(const BogoliubovTransform& t, const QuasiFreeState& s,
                               Direction dir);

/// [[gamma, alpha], [conj(alpha), 1 + conj(gamma)]] (positive semidefinite
/// for physical states).
cmat generalized_one_pdm(const QuasiFreeState& s);

QuasiFreeState vacuum_state(index_t n);

/// Check hermiticity/symmetry of (gamma, alpha) and positive semidefiniteness
/// of gamma and the generalized one-pdm.
void validate_state(const QuasiFreeState& s, double tol = 1e-8);

}  // namespace bogodiag
