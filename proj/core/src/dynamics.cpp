#include "bogodiag/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"

namespace bogodiag {

namespace {

struct Generator {
  cmat h;
  cmat k;
};

Generator eval_generator(const DynamicsProblem& p, double t) {
  Generator g{p.h_of_t(t), p.k2_of_t(t)};
  if (g.h.rows() != p.n || g.h.cols() != p.n || g.k.rows() != p.n || g.k.cols() != p.n)
    throw_input("DimensionMismatch", "time-dependent matrices must be n x n");
  double hs = std::max(1.0, maxabs(g.h));
  double ks = std::max(1.0, maxabs(g.k));
  if (hermiticity_defect(g.h) > defaults::sym_tol * hs * 100.0)
    throw_input("NotHermitian", "h(t) not Hermitian at t = " + std::to_string(t));
  if (symmetry_defect(g.k) > defaults::sym_tol * ks * 100.0)
    throw_input("NotSymmetric", "K2(t) not symmetric at t = " + std::to_string(t));
  return g;
}

struct Deriv {
  cmat dg;
  cmat da;
};

Deriv rhs(const Generator& gen, const cmat& gamma, const cmat& alpha) {
  const cmat& h = gen.h;
  const cmat& k = gen.k;
  Deriv d;
  d.dg = -imag_unit * (h * gamma - gamma * h + k * alpha.conjugate() - alpha * k.conjugate());
  d.da = -imag_unit * (h * alpha + alpha * h.transpose() + k + k * gamma.transpose() + gamma * k);
  return d;
}

TrajectoryMonitors make_monitors(const QuasiFreeState& s, const Generator& gen,
                                 double herm_defect, double symm_defect) {
  auto [x, y] = purity_witnesses(s);
  TrajectoryMonitors m;
  m.norm_x = x.norm();
  m.norm_y = y.norm();
  m.herm_defect = herm_defect;
  m.symm_defect = symm_defect;
  m.tr_gamma = s.gamma.trace().real();
  m.energy = (gen.h * s.gamma).trace().real() + (gen.k.adjoint() * s.alpha).trace().real();
  return m;
}

index_t step_count(double horizon, double dt) {
  double steps = horizon / dt;
  auto n = static_cast<index_t>(std::llround(steps));
  if (n >= 1 && std::abs(n * dt - horizon) < 1e-9 * horizon) return n;
  return static_cast<index_t>(std::ceil(steps - 1e-12));
}

}  // namespace

std::pair<cmat, cmat> purity_witnesses(const QuasiFreeState& s) {
  cmat x = s.gamma + s.gamma * s.gamma - s.alpha * s.alpha.adjoint();
  cmat y = s.gamma * s.alpha - s.alpha * s.gamma.transpose();
  return {x, y};
}

Trajectory evolve(const DynamicsProblem& p, const QuasiFreeState& s0) {
  if (p.dt <= 0.0) throw_input("InvalidParameter", "dt must be positive");
  if (p.horizon < p.dt) throw_input("InvalidParameter", "horizon must be at least dt");
  if (s0.n != p.n) throw_input("DimensionMismatch", "initial state size mismatch");
  validate_state(s0);

  const index_t nsteps = step_count(p.horizon, p.dt);
  Trajectory traj;
  traj.times.reserve(static_cast<size_t>(nsteps + 1));
  traj.states.reserve(static_cast<size_t>(nsteps + 1));
  traj.monitors.reserve(static_cast<size_t>(nsteps + 1));

  cmat gamma = s0.gamma;
  cmat alpha = s0.alpha;
  double t = 0.0;

  Generator g0 = eval_generator(p, 0.0);
  traj.times.push_back(0.0);
  traj.states.push_back(s0);
  traj.monitors.push_back(make_monitors(s0, g0, 0.0, 0.0));

  for (index_t step = 0; step < nsteps; ++step) {
    double dt = std::min(p.dt, p.horizon - t);
    Generator ga = eval_generator(p, t);
    Generator gm = eval_generator(p, t + 0.5 * dt);
    Generator gb = eval_generator(p, t + dt);

    Deriv k1 = rhs(ga, gamma, alpha);
    Deriv k2 = rhs(gm, gamma + 0.5 * dt * k1.dg, alpha + 0.5 * dt * k1.da);
    Deriv k3 = rhs(gm, gamma + 0.5 * dt * k2.dg, alpha + 0.5 * dt * k2.da);
    Deriv k4 = rhs(gb, gamma + dt * k3.dg, alpha + dt * k3.da);

    gamma += (dt / 6.0) * (k1.dg + 2.0 * k2.dg + 2.0 * k3.dg + k4.dg);
    alpha += (dt / 6.0) * (k1.da + 2.0 * k2.da + 2.0 * k3.da + k4.da);
    t += dt;

    if (!all_finite(gamma) || !all_finite(alpha))
      throw_numeric("NonFiniteState", "state blew up at t = " + std::to_string(t));

    double hd = hermiticity_defect(gamma);
    double sd = symmetry_defect(alpha);
    double scale = std::max({1.0, maxabs(gamma), maxabs(alpha)});
    if (hd > 1e-6 * scale || sd > 1e-6 * scale)
      throw_numeric("DefectBlowup", "structure defect exceeds 1e-6 at t = " + std::to_string(t) +
                                        "; reduce the step size");
    gamma = hermitize(gamma);
    alpha = symmetrize_t(alpha);

    QuasiFreeState s{p.n, gamma, alpha};
    traj.times.push_back(t);
    traj.states.push_back(s);
    traj.monitors.push_back(make_monitors(s, gb, hd, sd));
  }
  return traj;
}

namespace {

// psi <- exp(-i dt H) psi by an adaptively truncated Taylor series; H is
// applied through its sparse matrix, optionally split into equal slices to
// keep ||dt H|| small.
void expm_apply(const spmat& h, double dt, cvec& psi) {
  double hnorm = 0.0;
  for (int k = 0; k < h.outerSize(); ++k) {
    double col = 0.0;
    for (spmat::InnerIterator it(h, k); it; ++it) col += std::abs(it.value());
    hnorm = std::max(hnorm, col);
  }
  int slices = std::max(1, static_cast<int>(std::ceil(std::abs(dt) * hnorm / 0.5)));
  const complexd z = -imag_unit * (dt / slices);
  for (int s = 0; s < slices; ++s) {
    cvec term = psi;
    cvec acc = psi;
    for (int k = 1; k <= 80; ++k) {
      term = (z / double(k)) * (h * term).eval();
      acc += term;
      if (term.norm() <= 1e-17 * acc.norm()) break;
    }
    psi = acc;
  }
}

}  // namespace

Trajectory oracle_evolve(const DynamicsProblem& p, const TruncatedFock& f, const cvec& psi0,
                         int substeps) {
  if (p.dt <= 0.0) throw_input("InvalidParameter", "dt must be positive");
  if (p.horizon < p.dt) throw_input("InvalidParameter", "horizon must be at least dt");
  if (p.n != f.n_modes()) throw_input("DimensionMismatch", "problem modes and Fock modes differ");
  if (psi0.size() != f.dim()) throw_input("DimensionMismatch", "initial state size mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-12)
    throw_input("NotNormalized", "initial state must be normalized");
  if (substeps < 1) throw_input("InvalidParameter", "substeps must be >= 1");

  const int n = f.n_modes();
  const index_t d = f.dim();

  // quadratic monomials; H(t) is a fixed-pattern linear combination
  std::vector<spmat> num_ops, pair_ops;
  num_ops.reserve(static_cast<size_t>(n * n));
  pair_ops.reserve(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    spmat ci = f.creator(i);
    for (int j = 0; j < n; ++j) {
      num_ops.push_back(spmat(ci * f.annihilator(j)).pruned());
      pair_ops.push_back(spmat(ci * f.creator(j)).pruned());
    }
  }
  auto hamiltonian_at = [&](double t) -> spmat {
    Generator g = eval_generator(p, t);
    spmat h(d, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto idx = static_cast<size_t>(i * n + j);
        if (g.h(i, j) != complexd(0, 0)) h += g.h(i, j) * num_ops[idx];
        if (g.k(i, j) != complexd(0, 0)) {
          h += (0.5 * g.k(i, j)) * pair_ops[idx];
          h += (0.5 * std::conj(g.k(i, j))) * spmat(pair_ops[idx].adjoint());
        }
      }
    return h;
  };

  const index_t nsteps = step_count(p.horizon, p.dt);
  Trajectory traj;
  cvec psi = psi0;
  double t = 0.0;

  auto record = [&](double time, const cvec& state) {
    QuasiFreeState s = state_density_matrices(state, f);
    double hd = hermiticity_defect(s.gamma);
    double sd = symmetry_defect(s.alpha);
    s.gamma = hermitize(s.gamma);
    s.alpha = symmetrize_t(s.alpha);
    Generator g = eval_generator(p, time);
    traj.times.push_back(time);
    traj.states.push_back(s);
    traj.monitors.push_back(make_monitors(s, g, hd, sd));
  };

  record(0.0, psi);
  for (index_t step = 0; step < nsteps; ++step) {
    double dt = std::min(p.dt, p.horizon - t);
    double sub = dt / substeps;
    for (int s = 0; s < substeps; ++s) {
      spmat h = hamiltonian_at(t + (s + 0.5) * sub);
      double before = psi.norm();
      expm_apply(h, sub, psi);
      if (std::abs(psi.norm() - before) > 1e-10)
        throw_numeric("NormDrift", "propagator lost unitarity at t = " + std::to_string(t));
    }
    t += dt;
    record(t, psi);
  }
  return traj;
}

}  // namespace bogodiag
