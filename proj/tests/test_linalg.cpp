#include <doctest.h>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"
#include "bogodiag/random.hpp"
#include "helpers.hpp"

using namespace bogodiag;
using bogodiag::test::dev;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("hermitian square roots invert each other") {
  Rng rng(11);
  cmat a = random_hermitian_pd(5, rng, 0.3, 4.0);
  cmat r = hermitian_sqrt(a);
  cmat ri = hermitian_inv_sqrt(a);
  CHECK(dev(r * r, a) < 1e-12);
  CHECK(dev(r * ri, cmat::Identity(5, 5)) < 1e-12);
}

TEST_CASE("hermitian_sqrt rejects indefinite input") {
  cmat a = cmat::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = -1.0;
  CHECK_THROWS_WITH_AS(hermitian_sqrt(a), doctest::Contains("NotPositiveDefinite"), Error);
}

TEST_CASE("hermitian_inv_sqrt flags ill conditioning") {
  cmat a = cmat::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1e13;
  CHECK_THROWS_WITH_AS(hermitian_inv_sqrt(a), doctest::Contains("IllConditioned"), Error);
}

TEST_CASE("operator norm of a known matrix") {
  cmat a = cmat::Zero(2, 2);
  a(0, 1) = 2.0;
  CHECK(operator_norm(a) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("takagi reconstructs random symmetric matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    index_t n = 1 + static_cast<index_t>(rng.raw() % 6);
    cmat a = random_symmetric(n, rng);
    TakagiResult tk = takagi(a);
    CHECK(dev(tk.w * tk.d.asDiagonal() * tk.w.transpose(), a) < 1e-12);
    CHECK(dev(tk.w.adjoint() * tk.w, cmat::Identity(n, n)) < 1e-12);
    for (index_t i = 0; i < n; ++i) CHECK(tk.d(i) >= 0.0);
    for (index_t i = 1; i < n; ++i) CHECK(tk.d(i) <= tk.d(i - 1) + 1e-12);
  }
}

TEST_CASE("takagi handles degenerate and zero spectra") {
  // c*I has a fully degenerate singular value |c|
  cmat a = complexd(0.3, 0.4) * cmat::Identity(4, 4);
  TakagiResult tk = takagi(a);
  CHECK(dev(tk.w * tk.d.asDiagonal() * tk.w.transpose(), a) < 1e-12);
  CHECK(tk.d(0) == doctest::Approx(0.5).epsilon(1e-13));

  TakagiResult zero = takagi(cmat::Zero(3, 3));
  CHECK(zero.d.cwiseAbs().maxCoeff() == 0.0);

  // negative real entries force nontrivial phases
  cmat b = cmat::Zero(2, 2);
  b(0, 0) = -1.0;
  b(1, 1) = 2.0;
  TakagiResult tb = takagi(b);
  CHECK(dev(tb.w * tb.d.asDiagonal() * tb.w.transpose(), b) < 1e-13);
  CHECK(tb.d(0) == doctest::Approx(2.0));
  CHECK(tb.d(1) == doctest::Approx(1.0));
}

TEST_SUITE_END();
