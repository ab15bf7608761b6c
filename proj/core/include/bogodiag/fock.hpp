#pragma once

#include <Eigen/Sparse>
#include <optional>
#include <vector>

#include "bogodiag/diagonalizer.hpp"
#include "bogodiag/quadratic_model.hpp"
#include "bogodiag/types.hpp"

namespace bogodiag {

using spmat = Eigen::SparseMatrix<complexd>;

// Occupation-number basis with a total-number cutoff (sum n_i <= n_max),
// enumerated by total number and then by descending first-mode occupation,
// plus per-mode annihilation matrices. The CCR hold exactly on states at
// least two levels below the cutoff; the top shell carries the usual
// truncation defect.
class TruncatedFock {
 public:
  TruncatedFock(int n_modes, int n_max, int dim_max = defaults::fock_dim_max);

  int n_modes() const { return n_modes_; }
  int n_max() const { return n_max_; }
  index_t dim() const { return static_cast<index_t>(basis_.size()); }

  const std::vector<std::vector<int>>& basis() const { return basis_; }
  std::optional<index_t> index_of(const std::vector<int>& occupation) const;
  int shell(index_t idx) const;  // total occupation of basis state idx

  const spmat& annihilator(int mode) const { return ladder_[static_cast<size_t>(mode)]; }
  spmat creator(int mode) const { return ladder_[static_cast<size_t>(mode)].adjoint(); }

  cvec vacuum() const;
  cvec basis_vector(index_t idx) const;

 private:
  int n_modes_;
  int n_max_;
  std::vector<std::vector<int>> basis_;
  std::vector<spmat> ladder_;
};

struct DenseOperator {
  cmat matrix;
};

enum class AssemblyForm { normal_ordered, weyl };

/// Dense matrix of the Hamiltonian on the truncated space. normal_ordered
/// builds sum h_ij a_i^* a_j + 1/2 sum (k_ij a_i^* a_j^* + conj(k)_ij a_i a_j);
/// weyl builds 1/2 sum <F_m, A F_n> A^*(F_m) A(F_n) over the doubled-space
/// basis. Both are exact truncations of the same infinite matrices, so
/// weyl - normal_ordered = 1/2 Tr(h) entrywise.
DenseOperator assemble(const QuadraticHamiltonian& q, const TruncatedFock& f, AssemblyForm form);

/// Lowest `count` eigenvalues, ascending.
std::vector<double> exact_spectrum(const DenseOperator& h, int count);

/// gamma_ij = <psi| a_j^* a_i |psi>, alpha_ij = <psi| a_i a_j |psi>;
/// raw matrices, purity not assumed.
QuasiFreeState state_density_matrices(const cvec& psi, const TruncatedFock& f);

/// Max deviation over the Wick identities: odd moments up to order 3 must
/// vanish, order-4 moments must equal their pairing sums. The state must
/// keep its support at least two shells below the cutoff.
double wick_check(const cvec& psi, const TruncatedFock& f, int max_order = 4,
                  double support_tol = 1e-10);

}  // namespace bogodiag
