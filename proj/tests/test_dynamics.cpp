#include <doctest.h>

#include <cmath>

#include "bogodiag/diagonalizer.hpp"
#include "bogodiag/dynamics.hpp"
#include "bogodiag/errors.hpp"
#include "bogodiag/fock.hpp"
#include "bogodiag/linalg.hpp"
#include "bogodiag/random.hpp"
#include "helpers.hpp"

using namespace bogodiag;
using namespace bogodiag::test;

TEST_SUITE_BEGIN("dynamics");

namespace {

DynamicsProblem constant_problem(const cmat& h, const cmat& k, double horizon, double dt) {
  DynamicsProblem p;
  p.n = h.rows();
  p.h_of_t = [h](double) { return h; };
  p.k2_of_t = [k](double) { return k; };
  p.horizon = horizon;
  p.dt = dt;
  return p;
}

DynamicsProblem scalar_quench(double horizon, double dt) {
  return constant_problem(scalar_mat(1.0), scalar_mat(0.6), horizon, dt);
}

double max_purity(const Trajectory& traj) {
  double m = 0.0;
  for (const auto& mon : traj.monitors) m = std::max(m, mon.norm_x + mon.norm_y);
  return m;
}

}  // namespace

TEST_CASE("free evolution leaves a diagonal gamma fixed") {
  cmat h = cmat::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = 2.0;
  QuasiFreeState s0 = vacuum_state(2);
  s0.gamma(0, 0) = 0.4;
  s0.gamma(1, 1) = 0.1;
  auto traj = evolve(constant_problem(h, cmat::Zero(2, 2), 1.0, 1e-3), s0);
  for (const auto& s : traj.states) {
    CHECK(dev(s.gamma, s0.gamma) < 1e-12);
    CHECK(maxabs(s.alpha) < 1e-12);
  }
}

TEST_CASE("short-time expansion from the vacuum") {
  // alpha(t) = -i K t - h K t^2 + O(t^3); gamma(t) = |K|^2 t^2 + O(t^3)
  const double t1 = 1e-3;
  auto traj = evolve(scalar_quench(t1, 1e-5), vacuum_state(1));
  complexd alpha = traj.states.back().alpha(0, 0);
  CHECK(std::abs(alpha - complexd(0.0, -0.6e-3)) < 1e-6);
  double gamma = traj.states.back().gamma(0, 0).real();
  CHECK(gamma > 1e-7);
  CHECK(gamma < 1e-6);
  CHECK(std::abs(gamma - 0.36 * t1 * t1) < 1e-11);
}

TEST_CASE("purity witnesses on reference states") {
  auto [xv, yv] = purity_witnesses(vacuum_state(2));
  CHECK(xv.norm() == 0.0);
  CHECK(yv.norm() == 0.0);

  // the scalar ground state is pure: 0.125 + 0.015625 - 0.140625 = 0
  QuasiFreeState gs{1, scalar_mat(0.125), scalar_mat(-0.375)};
  auto [xg, yg] = purity_witnesses(gs);
  CHECK(maxabs(xg) < 1e-15);
  CHECK(maxabs(yg) < 1e-15);

  // occupied but uncorrelated: not pure
  QuasiFreeState thermal{1, scalar_mat(1.0), scalar_mat(0.0)};
  auto [xt, yt] = purity_witnesses(thermal);
  CHECK(xt(0, 0).real() == doctest::Approx(2.0));
}

TEST_CASE("purity is preserved along the quench") {
  auto traj = evolve(scalar_quench(1.0, 1e-3), vacuum_state(1));
  CHECK(max_purity(traj) < 1e-10);
}

TEST_CASE("purity defect decays at fourth order in the step") {
  double prev = 0.0;
  double rate = 0.0;
  for (double dt : {8e-3, 4e-3, 2e-3}) {
    double px = max_purity(evolve(scalar_quench(0.5, dt), vacuum_state(1)));
    if (prev > 0.0) rate = prev / px;
    prev = px;
    CHECK(px > 0.0);
  }
  CHECK(rate > std::pow(2.0, 3.5));
}

TEST_CASE("structure defects before correction stay at roundoff") {
  auto traj = evolve(scalar_quench(1.0, 1e-3), vacuum_state(1));
  for (const auto& m : traj.monitors) {
    CHECK(m.herm_defect < 1e-12);
    CHECK(m.symm_defect < 1e-12);
  }
}

TEST_CASE("the free sector is linear in the initial gamma") {
  Rng rng(19);
  cmat h = random_hermitian_pd(2, rng);
  auto p = constant_problem(h, cmat::Zero(2, 2), 0.5, 1e-3);

  QuasiFreeState a = vacuum_state(2), b = vacuum_state(2);
  a.gamma(0, 0) = 0.8;
  b.gamma(1, 1) = 0.5;
  const double lam = 0.3;
  QuasiFreeState mix = vacuum_state(2);
  mix.gamma = lam * a.gamma + (1.0 - lam) * b.gamma;

  auto ta = evolve(p, a), tb = evolve(p, b), tm = evolve(p, mix);
  for (size_t i = 0; i < tm.states.size(); ++i) {
    cmat combo = lam * ta.states[i].gamma + (1.0 - lam) * tb.states[i].gamma;
    CHECK(dev(tm.states[i].gamma, combo) < 1e-12);
    CHECK(maxabs(tm.states[i].alpha) < 1e-12);
  }
}

TEST_CASE("the ground state of a constant quench is stationary") {
  auto q = validate_hamiltonian(scalar_mat(1.0), scalar_mat(0.6));
  auto gs = ground_state_data(q, diagonalize(q).transform).first;
  auto traj = evolve(scalar_quench(1.0, 1e-3), gs);
  for (const auto& s : traj.states) {
    CHECK(dev(s.gamma, gs.gamma) < 1e-10);
    CHECK(dev(s.alpha, gs.alpha) < 1e-10);
  }
}

TEST_CASE("unstable step sizes are detected") {
  CHECK_THROWS_WITH_AS(evolve(scalar_quench(5000.0, 50.0), vacuum_state(1)),
                       doctest::Contains("NonFiniteState"), Error);
}

TEST_CASE("parameter and structure validation") {
  auto p = scalar_quench(1.0, 1e-3);
  p.dt = 0.0;
  CHECK_THROWS_WITH_AS(evolve(p, vacuum_state(1)), doctest::Contains("InvalidParameter"), Error);

  DynamicsProblem bad = scalar_quench(1.0, 1e-3);
  bad.h_of_t = [](double) {
    cmat m(1, 1);
    m(0, 0) = complexd(0.0, 1.0);  // not Hermitian
    return m;
  };
  CHECK_THROWS_WITH_AS(evolve(bad, vacuum_state(1)), doctest::Contains("NotHermitian"), Error);
}

TEST_CASE("oracle propagation: free particle keeps gamma fixed") {
  cmat h = scalar_mat(1.5);
  auto p = constant_problem(h, cmat::Zero(1, 1), 0.5, 1e-2);
  TruncatedFock f(1, 10);
  cvec one = f.basis_vector(1);
  auto traj = oracle_evolve(p, f, one, 1);
  for (const auto& s : traj.states) {
    CHECK(std::abs(s.gamma(0, 0).real() - 1.0) < 1e-8);
    CHECK(maxabs(s.alpha) < 1e-8);
  }
}

TEST_CASE("integrator agrees with the dense oracle on a constant quench") {
  auto p = scalar_quench(1.0, 1e-3);
  TruncatedFock f(1, 25);
  auto reference = oracle_evolve(p, f, f.vacuum(), 2);
  auto traj = evolve(p, vacuum_state(1));
  REQUIRE(reference.states.size() == traj.states.size());
  double worst = 0.0;
  for (size_t i = 0; i < traj.states.size(); ++i) {
    worst = std::max(worst, (traj.states[i].gamma - reference.states[i].gamma).norm());
    worst = std::max(worst, (traj.states[i].alpha - reference.states[i].alpha).norm());
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("integrator agrees with the dense oracle on a sinusoidal drive") {
  DynamicsProblem p;
  p.n = 1;
  p.h_of_t = [](double) { return scalar_mat(1.0); };
  p.k2_of_t = [](double t) { return scalar_mat(0.3 * std::sin(t)); };
  p.horizon = 1.0;
  p.dt = 1e-3;
  TruncatedFock f(1, 25);
  auto reference = oracle_evolve(p, f, f.vacuum(), 2);
  auto traj = evolve(p, vacuum_state(1));
  double worst = 0.0;
  for (size_t i = 0; i < traj.states.size(); ++i) {
    worst = std::max(worst, (traj.states[i].gamma - reference.states[i].gamma).norm());
    worst = std::max(worst, (traj.states[i].alpha - reference.states[i].alpha).norm());
  }
  CHECK(worst < 1e-6);
}

TEST_SUITE_END();
