#include "bogodiag/tddiag.hpp"

#include <cmath>
#include <string>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"

namespace bogodiag {

BogoliubovTransform generator_to_transform(const PairingGenerator& g, double tol_sym) {
  if (g.kgen.rows() != g.n || g.kgen.cols() != g.n)
    throw_input("DimensionMismatch", "generator must be n x n");
  if (symmetry_defect(g.kgen) > tol_sym * std::max(1.0, maxabs(g.kgen)))
    throw_input("NotSymmetric", "generator kernel must be symmetric");

  TakagiResult tk = takagi(symmetrize_t(g.kgen));
  rvec two_d = 2.0 * tk.d;
  cmat u = hermitize(tk.w * two_d.array().cosh().matrix().asDiagonal() * tk.w.adjoint());
  cmat v = tk.w.conjugate() * two_d.array().sinh().matrix().asDiagonal() * tk.w.adjoint();
  return BogoliubovTransform::from_blocks(u, symmetrize_t(v));
}

namespace {

// alpha = W (sinh 2D cosh 2D) W^T for the state of a generator W D W^T, so
// the generator is read off the Takagi factorization of alpha.
PairingGenerator generator_from_state(const QuasiFreeState& s) {
  TakagiResult ta = takagi(symmetrize_t(s.alpha));
  rvec d(ta.d.size());
  for (index_t i = 0; i < d.size(); ++i) d(i) = 0.25 * std::asinh(2.0 * ta.d(i));
  PairingGenerator g;
  g.n = s.n;
  g.kgen = symmetrize_t(ta.w * d.asDiagonal() * ta.w.transpose());
  return g;
}

double state_deviation(const QuasiFreeState& a, const QuasiFreeState& b) {
  return std::max(maxabs(a.gamma - b.gamma), maxabs(a.alpha - b.alpha));
}

}  // namespace

PairingGenerator transform_to_generator(const BogoliubovTransform& t, double tol) {
  QuasiFreeState target = transform_state(t, vacuum_state(t.n), Direction::forward);
  PairingGenerator g = generator_from_state(target);

  BogoliubovTransform back = generator_to_transform(g);
  QuasiFreeState repro = transform_state(back, vacuum_state(t.n), Direction::forward);
  double dev = state_deviation(target, repro);
  if (dev > tol)
    throw_numeric("GaugeObstruction", "no symmetric generator reproduces the state data; deviation " +
                                          std::to_string(dev));
  return g;
}

BogoliubovTransform state_to_transform(const QuasiFreeState& s, double purity_tol) {
  validate_state(s);
  auto [x, y] = purity_witnesses(s);
  double impurity = x.norm() + y.norm();
  if (impurity > purity_tol)
    throw_input("NotPure", "purity witnesses ||X||+||Y|| = " + std::to_string(impurity));

  PairingGenerator g = generator_from_state(s);
  BogoliubovTransform t = generator_to_transform(g);
  QuasiFreeState repro = transform_state(t, vacuum_state(s.n), Direction::forward);
  double dev = state_deviation(s, repro);
  if (dev > std::max(1e-8, purity_tol))
    throw_numeric("CompletionFailure",
                  "rebuilt transform misses the state by " + std::to_string(dev));
  return t;
}

std::vector<ResidualSample> tddiag_residual(const Trajectory& traj, const DynamicsProblem& p) {
  const size_t m = traj.times.size();
  if (m < 3) throw_input("GridTooCoarse", "need at least three trajectory samples");
  if (traj.states.size() != m)
    throw_input("DimensionMismatch", "trajectory times and states disagree");

  std::vector<ResidualSample> out;
  out.reserve(m - 2);
  for (size_t j = 1; j + 1 < m; ++j) {
    const double hm = traj.times[j] - traj.times[j - 1];
    const double hp = traj.times[j + 1] - traj.times[j];
    if (hm <= 0.0 || hp <= 0.0)
      throw_input("InvalidParameter", "trajectory times must be strictly increasing");

    // second-order three-point derivative, valid on nonuniform grids
    auto ddt = [&](auto member) -> cmat {
      const cmat& fm = traj.states[j - 1].*member;
      const cmat& f0 = traj.states[j].*member;
      const cmat& fp = traj.states[j + 1].*member;
      return (hm * hm * fp - hp * hp * fm + (hp * hp - hm * hm) * f0) / (hm * hp * (hm + hp));
    };
    cmat dgamma = ddt(&QuasiFreeState::gamma);
    cmat dalpha = ddt(&QuasiFreeState::alpha);

    cmat h = p.h_of_t(traj.times[j]);
    cmat k = p.k2_of_t(traj.times[j]);
    const cmat& gamma = traj.states[j].gamma;
    const cmat& alpha = traj.states[j].alpha;

    cmat rg = imag_unit * dgamma -
              (h * gamma - gamma * h + k * alpha.conjugate() - alpha * k.conjugate());
    cmat ra = imag_unit * dalpha -
              (h * alpha + alpha * h.transpose() + k + k * gamma.transpose() + gamma * k);

    out.push_back({traj.times[j], rg.norm(), ra.norm()});
  }
  return out;
}

}  // namespace bogodiag
