#pragma once

#include <cstdint>
#include <random>

#include "bogodiag/types.hpp"

namespace bogodiag {

struct QuadraticHamiltonian;
struct CommutativeInstance;

// Seeded generator with a self-contained normal sampler so that identical
// seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01();
  double uniform(double lo, double hi);
  double normal();
  complexd cnormal();
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

cmat random_unitary(index_t n, Rng& rng);
cmat random_hermitian_pd(index_t n, Rng& rng, double eig_lo = 0.5, double eig_hi = 2.0);
cmat random_symmetric(index_t n, Rng& rng);

/// random instance with the condition-operator norm scaled to target_norm_g
QuadraticHamiltonian random_instance(index_t n, Rng& rng, double target_norm_g);
CommutativeInstance random_commutative(index_t n, Rng& rng, double max_ratio = 0.9);

}  // namespace bogodiag
