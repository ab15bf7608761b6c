#include "bogodiag/random.hpp"

#include <cmath>

#include "bogodiag/commutative.hpp"
#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"
#include "bogodiag/quadratic_model.hpp"

namespace bogodiag {

double Rng::uniform01() {
  // 53-bit mantissa draw in (0, 1]
  return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::normal() {
  // Box-Muller on our own uniforms, so streams are reproducible everywhere
  double u1 = uniform01();
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

complexd Rng::cnormal() {
  double re = normal();
  double im = normal();
  return complexd(re, im) / std::sqrt(2.0);
}

cmat random_unitary(index_t n, Rng& rng) {
  cmat g(n, n);
  for (index_t i = 0; i < n; ++i)
    for (index_t j = 0; j < n; ++j) g(i, j) = rng.cnormal();
  Eigen::HouseholderQR<cmat> qr(g);
  cmat q = qr.householderQ();
  cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (index_t i = 0; i < n; ++i) {
    complexd d = r(i, i);
    double m = std::abs(d);
    q.col(i) *= (m > 0.0) ? (d / m) : complexd(1.0, 0.0);
  }
  return q;
}

cmat random_hermitian_pd(index_t n, Rng& rng, double eig_lo, double eig_hi) {
  cmat w = random_unitary(n, rng);
  rvec ev(n);
  for (index_t i = 0; i < n; ++i) ev(i) = rng.uniform(eig_lo, eig_hi);
  return hermitize(w * ev.asDiagonal() * w.adjoint());
}

cmat random_symmetric(index_t n, Rng& rng) {
  cmat g(n, n);
  for (index_t i = 0; i < n; ++i)
    for (index_t j = 0; j < n; ++j) g(i, j) = rng.cnormal();
  return symmetrize_t(g);
}

QuadraticHamiltonian random_instance(index_t n, Rng& rng, double target_norm_g) {
  cmat h = random_hermitian_pd(n, rng);
  cmat k = random_symmetric(n, rng);
  QuadraticHamiltonian q = validate_hamiltonian(h, k);
  if (target_norm_g > 0.0) {
    double g0 = operator_norm(condition_matrix(q));
    if (g0 > 0.0) q.k *= target_norm_g / g0;  // G is linear in k
  } else {
    q.k.setZero();
  }
  return q;
}

CommutativeInstance random_commutative(index_t n, Rng& rng, double max_ratio) {
  CommutativeInstance c;
  c.h_diag.resize(n);
  c.k_diag.resize(n);
  for (index_t i = 0; i < n; ++i) {
    c.h_diag(i) = rng.uniform(0.5, 2.5);
    c.k_diag(i) = rng.uniform(-max_ratio, max_ratio) * c.h_diag(i);
  }
  return c;
}

}  // namespace bogodiag
