#include "bogodiag/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"

namespace bogodiag {

namespace {

void enumerate_degree(int modes_left, int remaining, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (modes_left == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    enumerate_degree(modes_left - 1, remaining - v, cur, out);
    cur.pop_back();
  }
}

long long basis_size(int n_modes, int n_max) {
  // C(n_max + n_modes, n_modes), saturating
  long long dim = 1;
  for (int i = 1; i <= n_modes; ++i) {
    dim = dim * (n_max + i) / i;
    if (dim > (1LL << 40)) return 1LL << 40;
  }
  return dim;
}

std::map<std::vector<int>, index_t> build_index(const std::vector<std::vector<int>>& basis) {
  std::map<std::vector<int>, index_t> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<index_t>(i);
  return idx;
}

}  // namespace

TruncatedFock::TruncatedFock(int n_modes, int n_max, int dim_max)
    : n_modes_(n_modes), n_max_(n_max) {
  if (n_modes < 1) throw_input("InvalidParameter", "need at least one mode");
  if (n_max < 2) throw_input("InvalidParameter", "cutoff must be at least 2");
  long long dim = basis_size(n_modes, n_max);
  if (dim > dim_max)
    throw_input("DimensionOverflow", "truncated dimension " + std::to_string(dim) +
                                         " exceeds limit " + std::to_string(dim_max));

  std::vector<int> cur;
  for (int d = 0; d <= n_max; ++d) enumerate_degree(n_modes, d, cur, basis_);

  auto idx = build_index(basis_);
  const index_t d_total = this->dim();
  ladder_.resize(static_cast<size_t>(n_modes));
  for (int mode = 0; mode < n_modes; ++mode) {
    std::vector<Eigen::Triplet<complexd>> trips;
    for (index_t col = 0; col < d_total; ++col) {
      const auto& occ = basis_[static_cast<size_t>(col)];
      int m = occ[static_cast<size_t>(mode)];
      if (m == 0) continue;
      std::vector<int> lowered = occ;
      lowered[static_cast<size_t>(mode)] -= 1;
      index_t row = idx.at(lowered);
      trips.emplace_back(static_cast<int>(row), static_cast<int>(col), std::sqrt(double(m)));
    }
    spmat a(d_total, d_total);
    a.setFromTriplets(trips.begin(), trips.end());
    ladder_[static_cast<size_t>(mode)] = a;
  }
}

std::optional<index_t> TruncatedFock::index_of(const std::vector<int>& occupation) const {
  // linear scan is fine at desk scale; basis_ is grouped by total number
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == occupation) return static_cast<index_t>(i);
  return std::nullopt;
}

int TruncatedFock::shell(index_t idx) const {
  const auto& occ = basis_[static_cast<size_t>(idx)];
  int total = 0;
  for (int v : occ) total += v;
  return total;
}

cvec TruncatedFock::vacuum() const {
  cvec v = cvec::Zero(dim());
  v(0) = 1.0;
  return v;
}

cvec TruncatedFock::basis_vector(index_t idx) const {
  cvec v = cvec::Zero(dim());
  v(idx) = 1.0;
  return v;
}

namespace {

cmat assemble_normal_on(const QuadraticHamiltonian& q, const TruncatedFock& f) {
  const index_t d = f.dim();
  const int n = static_cast<int>(q.n);
  cmat h_num = cmat::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    spmat ci = f.creator(i);
    for (int j = 0; j < n; ++j)
      h_num += q.h(i, j) * cmat(ci * f.annihilator(j));
  }
  cmat pairing = cmat::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    spmat ci = f.creator(i);
    for (int j = 0; j < n; ++j)
      pairing += 0.5 * q.k(i, j) * cmat(ci * f.creator(j));
  }
  return h_num + pairing + pairing.adjoint();
}

}  // namespace

DenseOperator assemble(const QuadraticHamiltonian& q, const TruncatedFock& f, AssemblyForm form) {
  if (q.n != f.n_modes())
    throw_input("DimensionMismatch", "instance modes and Fock modes differ");
  const index_t d = f.dim();
  const int n = static_cast<int>(q.n);

  DenseOperator out;
  if (form == AssemblyForm::normal_ordered) {
    out.matrix = assemble_normal_on(q, f);
  } else {
    // Work on a space enlarged by two shells so that every quadratic product,
    // including a a^*, restricts to the exact truncation of its infinite
    // counterpart; then cut back. Graded enumeration makes the target basis a
    // prefix of the enlarged one.
    TruncatedFock big(f.n_modes(), f.n_max() + 2, 4 * defaults::fock_dim_max);
    const index_t dbig = big.dim();
    BlockOperator blk = build_block_operator(q);

    std::vector<spmat> gen;  // A(F_m): a_0..a_{n-1}, a^*_0..a^*_{n-1}
    gen.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) gen.push_back(big.annihilator(i));
    for (int i = 0; i < n; ++i) gen.push_back(big.creator(i));

    cmat w = cmat::Zero(dbig, dbig);
    for (int m = 0; m < 2 * n; ++m) {
      spmat am_dag = gen[static_cast<size_t>(m)].adjoint();
      for (int l = 0; l < 2 * n; ++l) {
        complexd coeff = 0.5 * blk.a(m, l);
        if (coeff == complexd(0.0, 0.0)) continue;
        w += coeff * cmat(am_dag * gen[static_cast<size_t>(l)]);
      }
    }
    out.matrix = w.topLeftCorner(d, d);
  }

  double scale = std::max(1.0, maxabs(out.matrix));
  if (hermiticity_defect(out.matrix) > 1e-12 * scale)
    throw_numeric("NotHermitian", "assembled operator lost hermiticity");
  return out;
}

std::vector<double> exact_spectrum(const DenseOperator& h, int count) {
  rvec ev = hermitian_eigenvalues(h.matrix);
  int k = std::min<int>(count, static_cast<int>(ev.size()));
  return std::vector<double>(ev.data(), ev.data() + k);
}

QuasiFreeState state_density_matrices(const cvec& psi, const TruncatedFock& f) {
  if (psi.size() != f.dim()) throw_input("DimensionMismatch", "state size mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw_input("NotNormalized", "state norm deviates from 1 by more than 1e-12");

  const int n = f.n_modes();
  std::vector<cvec> a_psi(static_cast<size_t>(n)), adag_psi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    a_psi[static_cast<size_t>(i)] = f.annihilator(i) * psi;
    adag_psi[static_cast<size_t>(i)] = f.creator(i) * psi;
  }

  QuasiFreeState s;
  s.n = n;
  s.gamma.resize(n, n);
  s.alpha.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // <a_j^* a_i> and <a_i a_j>
      s.gamma(i, j) = a_psi[static_cast<size_t>(j)].dot(a_psi[static_cast<size_t>(i)]);
      s.alpha(i, j) = adag_psi[static_cast<size_t>(i)].dot(a_psi[static_cast<size_t>(j)]);
    }
  return s;
}

double wick_check(const cvec& psi, const TruncatedFock& f, int max_order, double support_tol) {
  if (psi.size() != f.dim()) throw_input("DimensionMismatch", "state size mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw_input("NotNormalized", "state norm deviates from 1 by more than 1e-12");
  if (max_order < 2 || max_order > 4)
    throw_input("InvalidParameter", "supported moment orders are 2..4");

  // moments are evaluated split in half, so intermediates climb at most two
  // shells: the state must be negligible above n_max - 2
  double tail = 0.0;
  for (index_t i = 0; i < f.dim(); ++i)
    if (f.shell(i) > f.n_max() - 2) tail += std::norm(psi(i));
  if (tail > support_tol)
    throw_input("CutoffTooTight", "state weight " + std::to_string(tail) +
                                      " above shell " + std::to_string(f.n_max() - 2));

  const int n = f.n_modes();
  const int nops = 2 * n;  // a_0..a_{n-1}, a^*_0..a^*_{n-1}
  auto op = [&](int p) -> spmat {
    return p < n ? f.annihilator(p) : f.creator(p - n);
  };
  auto conj_op = [&](int p) { return p < n ? p + n : p - n; };  // adjoint index

  std::vector<cvec> one(static_cast<size_t>(nops));
  for (int p = 0; p < nops; ++p) one[static_cast<size_t>(p)] = op(p) * psi;

  std::vector<std::vector<cvec>> two(static_cast<size_t>(nops),
                                     std::vector<cvec>(static_cast<size_t>(nops)));
  for (int p = 0; p < nops; ++p)
    for (int q = 0; q < nops; ++q)
      two[static_cast<size_t>(p)][static_cast<size_t>(q)] =
          op(p) * one[static_cast<size_t>(q)];

  // <O_p O_q> = <(O_p^H)^H psi applied...> = (op(conj p) psi)^H (op(q) psi)
  auto mom2 = [&](int p, int q) -> complexd {
    return one[static_cast<size_t>(conj_op(p))].dot(one[static_cast<size_t>(q)]);
  };

  double dev = 0.0;

  // order 1
  for (int p = 0; p < nops; ++p)
    dev = std::max(dev, std::abs(psi.dot(one[static_cast<size_t>(p)])));

  // order 3: <O_p O_q O_r> = <(O_q^H O_p^H) psi, O_r psi>
  if (max_order >= 3) {
    for (int p = 0; p < nops; ++p)
      for (int q = 0; q < nops; ++q)
        for (int r = 0; r < nops; ++r) {
          complexd m =
              two[static_cast<size_t>(conj_op(q))][static_cast<size_t>(conj_op(p))].dot(
                  one[static_cast<size_t>(r)]);
          dev = std::max(dev, std::abs(m));
        }
  }

  // order 4 against the three pairings (12)(34), (13)(24), (14)(23)
  if (max_order >= 4) {
    for (int p = 0; p < nops; ++p)
      for (int q = 0; q < nops; ++q)
        for (int r = 0; r < nops; ++r)
          for (int s = 0; s < nops; ++s) {
            complexd direct =
                two[static_cast<size_t>(conj_op(q))][static_cast<size_t>(conj_op(p))].dot(
                    two[static_cast<size_t>(r)][static_cast<size_t>(s)]);
            complexd pairing = mom2(p, q) * mom2(r, s) + mom2(p, r) * mom2(q, s) +
                               mom2(p, s) * mom2(q, r);
            dev = std::max(dev, std::abs(direct - pairing));
          }
  }
  return dev;
}

}  // namespace bogodiag
