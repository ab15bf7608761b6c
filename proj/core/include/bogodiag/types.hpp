#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bogodiag {

using complexd = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rmat = Eigen::MatrixXd;
using rvec = Eigen::VectorXd;
using index_t = Eigen::Index;

inline constexpr complexd imag_unit{0.0, 1.0};

// Default tolerances. "Relative" tolerances are scaled by the max-norm (or a
// comparable scale) of the quantity they guard.
namespace defaults {
inline constexpr double sym_tol = 1e-10;    // hermiticity / symmetry defects, relative
inline constexpr double gap_tol = 1e-9;     // margin in the diagonalizability test ||G|| < 1
inline constexpr double cond_max = 1e12;    // condition-number ceiling for h
inline constexpr double psd_clamp = 1e-12;  // eigenvalue clamp window at the PSD boundary, relative
inline constexpr double symp_tol = 1e-8;    // symplectic identity residuals, relative
inline constexpr double diag_tol = 1e-8;    // off-diagonal block residual, relative
inline constexpr double num_tol = 1e-9;     // absolute, on unit-scale quantities
inline constexpr double pair_tol = 1e-12;   // +/- eigenvalue pairing guard, relative
inline constexpr int fock_dim_max = 5000;   // dense truncated-Fock ceiling
}  // namespace defaults

}  // namespace bogodiag
