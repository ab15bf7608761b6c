#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "bogodiag/errors.hpp"
#include "bogodiag/fock.hpp"
#include "bogodiag/linalg.hpp"
#include "bogodiag/random.hpp"
#include "helpers.hpp"

using namespace bogodiag;
using namespace bogodiag::test;

TEST_SUITE_BEGIN("fock_oracle");

namespace {

QuadraticHamiltonian scalar_instance(double h, double k) {
  return validate_hamiltonian(scalar_mat(h), scalar_mat(k));
}

cvec dense_ground_state(const cmat& h) {
  Eigen::SelfAdjointEigenSolver<cmat> es(h);
  cvec g = es.eigenvectors().col(0);
  return g / g.norm();
}

}  // namespace

TEST_CASE("single-mode ladder matrix") {
  TruncatedFock f(1, 3);
  CHECK(f.dim() == 4);
  cmat a = cmat(f.annihilator(0));
  for (int m = 1; m <= 3; ++m) CHECK(a(m - 1, m) == complexd(std::sqrt(double(m)), 0.0));
  CHECK(maxabs(cmat(a.triangularView<Eigen::Lower>())) == 0.0);
}

TEST_CASE("two-mode basis enumeration is graded") {
  TruncatedFock f(2, 2);
  CHECK(f.dim() == 6);
  std::vector<std::vector<int>> expect = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(f.basis() == expect);
  CHECK(f.index_of({1, 1}).value() == 4);
  CHECK_FALSE(f.index_of({3, 0}).has_value());
}

TEST_CASE("interior CCR hold, the top shell carries the truncation defect") {
  TruncatedFock f(2, 4);
  const index_t d = f.dim();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cmat comm = cmat(f.annihilator(i) * f.creator(j)) - cmat(f.creator(j) * f.annihilator(i));
      cmat swap = cmat(f.annihilator(i) * f.annihilator(j)) -
                  cmat(f.annihilator(j) * f.annihilator(i));
      for (index_t col = 0; col < d; ++col) {
        if (f.shell(col) > f.n_max() - 2) continue;  // interior only
        for (index_t row = 0; row < d; ++row) {
          complexd expect = (i == j && row == col) ? complexd(1.0, 0.0) : complexd(0.0, 0.0);
          if (i != j || row != col)
            CHECK(comm(row, col) == expect);  // exact: disjoint products
          else
            CHECK(std::abs(comm(row, col) - expect) < 1e-12);  // roundoff of sqrt products
          CHECK(swap(row, col) == complexd(0.0, 0.0));
        }
      }
    }

  // cutoff-top column: the commutator collapses to -a^dag a there
  cmat comm0 = cmat(f.annihilator(0) * f.creator(0)) - cmat(f.creator(0) * f.annihilator(0));
  index_t top = f.index_of({4, 0}).value();
  CHECK(std::abs(comm0(top, top) + 4.0) < 1e-12);
}

TEST_CASE("number operator assembly") {
  TruncatedFock f(1, 3);
  auto h = assemble(scalar_instance(1.0, 0.0), f, AssemblyForm::normal_ordered);
  for (int m = 0; m <= 3; ++m) CHECK(std::abs(h.matrix(m, m) - double(m)) < 1e-14);
  CHECK(maxabs(h.matrix - h.matrix.diagonal().asDiagonal().toDenseMatrix()) == 0.0);
}

TEST_CASE("scalar pairing assembly against hand expansion") {
  // H = n + 0.3 (a^dag^2 + a^2) on the 4-level space:
  // <2|H|0> = 0.3 sqrt(2), <3|H|1> = 0.3 sqrt(6)
  TruncatedFock f(1, 3);
  auto h = assemble(scalar_instance(1.0, 0.6), f, AssemblyForm::normal_ordered);
  cmat expect = cmat::Zero(4, 4);
  expect(1, 1) = 1.0;
  expect(2, 2) = 2.0;
  expect(3, 3) = 3.0;
  expect(2, 0) = expect(0, 2) = 0.3 * std::sqrt(2.0);
  expect(3, 1) = expect(1, 3) = 0.3 * std::sqrt(6.0);
  CHECK(dev(h.matrix, expect) < 1e-14);
}

TEST_CASE("weyl and normal-ordered assemblies differ by half the trace of h") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    index_t n = 1 + static_cast<index_t>(rng.raw() % 2);
    auto q = random_instance(n, rng, rng.uniform(0.1, 0.8));
    TruncatedFock f(static_cast<int>(n), 8);
    auto hn = assemble(q, f, AssemblyForm::normal_ordered);
    auto hw = assemble(q, f, AssemblyForm::weyl);
    cmat shift = complexd(0.5, 0.0) * q.h.trace() * cmat::Identity(f.dim(), f.dim());
    CHECK(maxabs(hw.matrix - hn.matrix - shift) < 1e-13);
  }
}

TEST_CASE("scalar spectrum reproduces the quasiparticle ladder") {
  TruncatedFock f(1, 40);
  auto h = assemble(scalar_instance(1.0, 0.6), f, AssemblyForm::normal_ordered);
  auto spec = exact_spectrum(h, 3);
  CHECK(std::abs(spec[0] - (-0.1)) < 1e-8);
  CHECK(std::abs(spec[1] - 0.7) < 1e-8);
  CHECK(std::abs(spec[2] - 1.5) < 1e-8);
}

TEST_CASE("zero pairing spectrum is the occupation grid") {
  cmat h2 = cmat::Zero(2, 2);
  h2(0, 0) = 1.25;
  h2(1, 1) = 2.5;
  auto q = validate_hamiltonian(h2, cmat::Zero(2, 2));
  TruncatedFock f(2, 3);
  auto spec = exact_spectrum(assemble(q, f, AssemblyForm::normal_ordered), 6);
  std::vector<double> expect = {0.0, 1.25, 2.5, 2.5, 3.75, 3.75};
  for (size_t i = 0; i < expect.size(); ++i) CHECK(std::abs(spec[i] - expect[i]) < 1e-12);
}

TEST_CASE("pair-instance spectrum matches the two-mode ladder") {
  auto q = bogoliubov_1947_pair(1.0, 1.0, 0.5);
  TruncatedFock f(2, 30);
  auto spec = exact_spectrum(assemble(q, f, AssemblyForm::normal_ordered), 3);
  const double e0 = std::sqrt(2.0) - 1.5;
  CHECK(std::abs(spec[0] - e0) < 1e-6);
  CHECK(std::abs(spec[1] - (e0 + std::sqrt(2.0))) < 1e-6);
  CHECK(std::abs(spec[2] - (e0 + std::sqrt(2.0))) < 1e-6);
}

TEST_CASE("ground-state convergence is monotone in the cutoff") {
  double prev = 1e9;
  for (int cutoff : {10, 20, 40}) {
    TruncatedFock f(1, cutoff);
    auto spec = exact_spectrum(assemble(scalar_instance(1.0, 0.6), f, AssemblyForm::normal_ordered), 1);
    double err = std::abs(spec[0] - (-0.1));
    CHECK(err <= prev + 1e-15);
    prev = err;
  }
}

TEST_CASE("density matrices of elementary states") {
  TruncatedFock f(2, 4);
  auto vac = state_density_matrices(f.vacuum(), f);
  CHECK(maxabs(vac.gamma) == 0.0);
  CHECK(maxabs(vac.alpha) == 0.0);

  cvec one = f.basis_vector(f.index_of({1, 0}).value());
  auto s1 = state_density_matrices(one, f);
  CHECK(s1.gamma(0, 0) == complexd(1.0, 0.0));
  CHECK(s1.gamma(1, 1) == complexd(0.0, 0.0));
  CHECK(maxabs(s1.alpha) == 0.0);

  CHECK_THROWS_WITH_AS(state_density_matrices(2.0 * f.vacuum(), f),
                       doctest::Contains("NotNormalized"), Error);
}

TEST_CASE("dense ground state reproduces the scalar density matrices") {
  TruncatedFock f(1, 40);
  auto h = assemble(scalar_instance(1.0, 0.6), f, AssemblyForm::normal_ordered);
  cvec g = dense_ground_state(h.matrix);
  auto s = state_density_matrices(g, f);
  CHECK(std::abs(s.gamma(0, 0).real() - kGammaScalar) < 1e-6);
  CHECK(std::abs(s.alpha(0, 0).real() - kAlphaScalar) < 1e-6);

  // purity witnesses vanish to truncation accuracy
  cmat x = s.gamma + s.gamma * s.gamma - s.alpha * s.alpha.adjoint();
  cmat y = s.gamma * s.alpha - s.alpha * s.gamma.transpose();
  CHECK(x.norm() < 1e-8);
  CHECK(y.norm() < 1e-8);
}

TEST_CASE("wick identities: vacuum and exact ground state pass") {
  TruncatedFock f(1, 40);
  CHECK(wick_check(f.vacuum(), f) < 1e-12);

  auto h = assemble(scalar_instance(1.0, 0.6), f, AssemblyForm::normal_ordered);
  CHECK(wick_check(dense_ground_state(h.matrix), f) < 1e-6);
}

TEST_CASE("two-particle state fails the wick identities by 6") {
  TruncatedFock f(1, 40);
  cvec two = f.basis_vector(2);
  CHECK(std::abs(wick_check(two, f) - 6.0) < 1e-9);
}

TEST_CASE("wick guard rejects states at the cutoff") {
  TruncatedFock f(1, 6);
  cvec top = f.basis_vector(6);
  CHECK_THROWS_WITH_AS(wick_check(top, f), doctest::Contains("CutoffTooTight"), Error);
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_WITH_AS(TruncatedFock(3, 100), doctest::Contains("DimensionOverflow"), Error);
  CHECK_THROWS_WITH_AS(TruncatedFock(1, 1), doctest::Contains("InvalidParameter"), Error);
}

TEST_SUITE_END();
