#include "bogodiag_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iostream>
#include <queue>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "bogodiag/commutative.hpp"
#include "bogodiag/diagonalizer.hpp"
#include "bogodiag/dynamics.hpp"
#include "bogodiag/errors.hpp"
#include "bogodiag/fock.hpp"
#include "bogodiag/linalg.hpp"
#include "bogodiag/quadratic_model.hpp"
#include "bogodiag/random.hpp"
#include "bogodiag/tddiag.hpp"
#include "bogodiag_cli/json_io.hpp"

namespace bogodiag::cli {

namespace {

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty())
    std::cout << text;
  else
    write_text_file(opt.output, text);
}

void emit_json(const Options& opt, const ordered_json& j) {
  if (opt.output.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(opt.output, j);
}

// lowest `count` values of E0 + sum m_i xi_i over occupation vectors m
std::vector<double> predicted_levels(double e0, const rvec& xi, int count) {
  using Node = std::pair<double, std::vector<int>>;
  auto cmp = [](const Node& a, const Node& b) { return a.first > b.first; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  std::set<std::vector<int>> seen;
  std::vector<int> zero(static_cast<size_t>(xi.size()), 0);
  heap.push({e0, zero});
  seen.insert(zero);

  std::vector<double> out;
  while (!heap.empty() && static_cast<int>(out.size()) < count) {
    auto [val, occ] = heap.top();
    heap.pop();
    out.push_back(val);
    for (index_t i = 0; i < xi.size(); ++i) {
      auto next = occ;
      next[static_cast<size_t>(i)] += 1;
      if (seen.insert(next).second) heap.push({val + xi(i), next});
    }
  }
  return out;
}

void require_seed(const Options& opt) {
  if (!opt.has_seed)
    throw_input("InvalidParameter", "--seed is required for randomized commands");
}

}  // namespace

int thread_limit() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BOGODIAG_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(std::min<long>(v, hw));
  }
  return static_cast<int>(hw);
}

int cmd_diagonalize(const Options& opt) {
  QuadraticHamiltonian q = load_hamiltonian(opt.input);
  ConditionReport rep = classify(q);
  DiagonalizationResult res = diagonalize(q);
  TransformReport tr = verify_transform(res.transform, rep.norm_g, rep.hs_g);

  ordered_json j;
  j["U"] = matrix_to_json(res.transform.u);
  j["V"] = matrix_to_json(res.transform.v);
  j["xi"] = matrix_to_json(res.xi);
  j["xi_eigs"] = std::vector<double>(res.xi_eigs.data(), res.xi_eigs.data() + res.xi_eigs.size());
  j["ground_energy"] = res.ground_energy;
  j["residuals"] = ordered_json{{"symplectic_max", tr.max_residual},
                                {"offdiag", res.offdiag_residual},
                                {"norm_bound_slack", tr.slack_norm_bound},
                                {"hs_bound_slack", tr.slack_hs_bound}};
  emit_json(opt, j);
  return 0;
}

int cmd_spectrum(const Options& opt) {
  QuadraticHamiltonian q = load_hamiltonian(opt.input);
  int count = opt.count > 0 ? opt.count : 3;
  DiagonalizationResult res = diagonalize(q);

  TruncatedFock f(static_cast<int>(q.n), opt.cutoff);
  DenseOperator h = assemble(q, f, AssemblyForm::normal_ordered);
  std::vector<double> dense = exact_spectrum(h, count);
  std::vector<double> pred = predicted_levels(res.ground_energy, res.xi_eigs, count);

  std::ostringstream csv;
  csv << "level,energy,predicted,abs_error\n";
  for (size_t i = 0; i < dense.size(); ++i)
    csv << i << ',' << fmt17(dense[i]) << ',' << fmt17(pred[i]) << ','
        << fmt17(std::abs(dense[i] - pred[i])) << '\n';
  emit(opt, csv.str());
  return 0;
}

int cmd_evolve(const Options& opt) {
  ProblemFile pf = load_problem(opt.input);
  if (opt.dt > 0.0) pf.problem.dt = opt.dt;
  if (opt.horizon > 0.0) pf.problem.horizon = opt.horizon;

  Trajectory traj = evolve(pf.problem, pf.initial);
  emit(opt, trajectory_csv(traj));
  if (!opt.dump_states.empty()) dump_trajectory_states(opt.dump_states, traj);
  return 0;
}

int cmd_oracle(const Options& opt) {
  QuadraticHamiltonian q = load_hamiltonian(opt.input);
  TruncatedFock f(static_cast<int>(q.n), opt.cutoff);

  DenseOperator hn = assemble(q, f, AssemblyForm::normal_ordered);
  DenseOperator hw = assemble(q, f, AssemblyForm::weyl);
  double weyl_dev = maxabs(hw.matrix - hn.matrix -
                           complexd(0.5, 0.0) * q.h.trace() *
                               cmat::Identity(f.dim(), f.dim()));

  Eigen::SelfAdjointEigenSolver<cmat> es(hn.matrix);
  cvec ground = es.eigenvectors().col(0);
  ground /= ground.norm();
  QuasiFreeState dense_state = state_density_matrices(ground, f);
  double wick = wick_check(ground, f);

  ordered_json j;
  j["dim"] = f.dim();
  j["weyl_identity_max_dev"] = weyl_dev;
  j["ground_energy_dense"] = es.eigenvalues()(0);
  j["gamma_dense"] = matrix_to_json(dense_state.gamma);
  j["alpha_dense"] = matrix_to_json(dense_state.alpha);
  j["wick_deviation"] = wick;

  ConditionReport rep = classify(q);
  if (rep.diagonalizable) {
    DiagonalizationResult res = diagonalize(q);
    auto [gs, e0] = ground_state_data(q, res.transform);
    j["ground_energy_predicted"] = e0;
    j["gamma_predicted"] = matrix_to_json(gs.gamma);
    j["alpha_predicted"] = matrix_to_json(gs.alpha);
    j["gamma_max_dev"] = maxabs(dense_state.gamma - gs.gamma);
    j["alpha_max_dev"] = maxabs(dense_state.alpha - gs.alpha);
  }
  emit_json(opt, j);
  return 0;
}

int cmd_verify(const Options& opt) {
  QuadraticHamiltonian q = load_hamiltonian(opt.input);
  const double tol = opt.tol > 0.0 ? opt.tol : 1e-8;
  bool ok = true;
  auto check = [&ok](bool pass, const std::string& name, double value) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << " (" << fmt17(value) << ")\n";
    if (!pass) ok = false;
  };

  BlockOperator blk = build_block_operator(q);
  double a_scale = std::max(1.0, maxabs(blk.a));
  check(hermiticity_defect(blk.a) <= tol * a_scale, "block operator hermiticity defect",
        hermiticity_defect(blk.a));
  check(maxabs(j_conjugate(blk.a) - blk.a) <= tol * a_scale,
        "block operator conjugate-swap invariance defect", maxabs(j_conjugate(blk.a) - blk.a));

  ConditionReport rep = classify(q);
  check(rep.hs_g >= rep.norm_g - defaults::num_tol, "HS norm dominates operator norm of G",
        rep.hs_g - rep.norm_g);
  check(rep.lower_bound <= defaults::num_tol, "lower bound is nonpositive", rep.lower_bound);

  if (!rep.diagonalizable) {
    std::cout << "SKIP diagonalization (norm_G = " << fmt17(rep.norm_g) << " is not below 1)\n";
    std::cout << (ok ? "verify: OK\n" : "verify: VIOLATION\n");
    return ok ? 0 : 1;
  }

  DiagonalizationResult res = diagonalize(q);
  TransformReport tr = verify_transform(res.transform, rep.norm_g, rep.hs_g);
  check(tr.max_residual <= tol, "symplectic identity residual", tr.max_residual);
  check(res.offdiag_residual <= tol * blk.a.norm(), "off-diagonal block residual",
        res.offdiag_residual);
  check(res.xi_eigs(0) > 0.0, "excitation operator positivity", res.xi_eigs(0));
  check(tr.slack_norm_bound >= -defaults::num_tol, "operator-norm bound slack",
        tr.slack_norm_bound);
  check(tr.slack_hs_bound >= -defaults::num_tol, "HS bound slack", tr.slack_hs_bound);

  auto [gs, e0] = ground_state_data(q, res.transform);
  auto [x, y] = purity_witnesses(gs);
  check(x.norm() <= 100 * tol && y.norm() <= 100 * tol, "ground-state purity witnesses",
        x.norm() + y.norm());
  check(e0 >= rep.lower_bound - defaults::num_tol, "ground energy above lower bound",
        e0 - rep.lower_bound);
  double trace_formula = 0.5 * ((res.xi - q.h).trace()).real();
  check(std::abs(e0 - trace_formula) <= 100 * tol * std::max(1.0, std::abs(e0)),
        "ground energy trace-formula consistency", std::abs(e0 - trace_formula));

  QuasiFreeState vac_fwd = transform_state(res.transform, vacuum_state(q.n), Direction::forward);
  double state_dev =
      std::max(maxabs(vac_fwd.gamma - gs.gamma), maxabs(vac_fwd.alpha - gs.alpha));
  check(state_dev <= tol, "vacuum transport matches ground-state data", state_dev);

  std::cout << (ok ? "verify: OK\n" : "verify: VIOLATION\n");
  return ok ? 0 : 1;
}

int cmd_example(const Options& opt) {
  require_seed(opt);
  const int count = opt.count > 0 ? opt.count : 50;
  const double tol = opt.tol > 0.0 ? opt.tol : 1e-10;

  // instances are drawn up front so the workload is independent of the
  // thread partition; BOGODIAG_THREADS caps the workers
  Rng rng(opt.seed);
  std::vector<CommutativeInstance> instances;
  instances.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    instances.push_back(random_commutative(1 + static_cast<index_t>(rng.raw() % 8), rng, 0.9));

  const int workers = std::min(thread_limit(), count);
  std::vector<double> devs(static_cast<size_t>(count), 0.0);
  std::vector<std::future<void>> futs;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w)
    futs.push_back(std::async(std::launch::async, [&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        devs[static_cast<size_t>(i)] = oracle_compare(instances[static_cast<size_t>(i)]);
    }));
  for (auto& f : futs) f.get();

  double worst = 0.0;
  for (double d : devs) worst = std::max(worst, d);
  std::ostringstream out;
  out << "instances," << count << "\nmax_deviation," << fmt17(worst) << "\ntolerance,"
      << fmt17(tol) << "\n";
  emit(opt, out.str());
  if (worst > tol) {
    std::cerr << "example: max deviation " << fmt17(worst) << " exceeds tolerance\n";
    return 1;
  }
  return 0;
}

int cmd_probe(const Options& opt) {
  require_seed(opt);
  const int count = opt.count > 0 ? opt.count : 10;
  const int cutoff = std::min(opt.cutoff, 16);
  Rng rng(opt.seed);

  std::ostringstream csv;
  csv << "instance,n,norm_G,delta,slack_upper_printed,slack_lower_printed,slack_lower_soft,"
         "slack_upper_wide,slack_lower_wide,slack_simple\n";
  for (int i = 0; i < count; ++i) {
    const auto n = static_cast<index_t>(1 + rng.raw() % 2);
    QuadraticHamiltonian q = random_instance(n, rng, rng.uniform(0.1, 0.85));
    ConditionReport rep = classify(q);
    const double delta = rep.norm_g * rep.norm_g;
    const double trace = rep.hs_kh_half * rep.hs_kh_half;  // Tr(k h^{-1} k^*)
    const double c_printed = 0.5 * std::sqrt(delta) * trace;
    const double c_wide = 0.5 * trace / std::sqrt(delta);

    TruncatedFock f(static_cast<int>(n), cutoff);
    cmat hmat = assemble(q, f, AssemblyForm::normal_ordered).matrix;
    QuadraticHamiltonian free_q = q;
    free_q.k.setZero();
    cmat dgamma_h = assemble(free_q, f, AssemblyForm::normal_ordered).matrix;
    cmat eye = cmat::Identity(f.dim(), f.dim());

    // min-eigenvalue slack of each candidate operator inequality; the
    // "wide" rows use the constant the Cauchy-Schwarz estimate produces
    auto slack = [&](const cmat& m) { return hermitian_eigenvalues(m)(0); };
    double up_printed = slack((1.0 + std::sqrt(delta)) * dgamma_h + c_printed * eye - hmat);
    double low_printed = slack(hmat - (1.0 + std::sqrt(delta)) * dgamma_h + c_printed * eye);
    double low_soft = slack(hmat - (1.0 - std::sqrt(delta)) * dgamma_h + c_printed * eye);
    double up_wide = slack((1.0 + std::sqrt(delta)) * dgamma_h + c_wide * eye - hmat);
    double low_wide = slack(hmat - (1.0 - std::sqrt(delta)) * dgamma_h + c_wide * eye);
    double simple = slack(hmat) + 0.5 * trace;

    csv << i << ',' << n << ',' << fmt17(rep.norm_g) << ',' << fmt17(delta) << ','
        << fmt17(up_printed) << ',' << fmt17(low_printed) << ',' << fmt17(low_soft) << ','
        << fmt17(up_wide) << ',' << fmt17(low_wide) << ',' << fmt17(simple) << '\n';
  }
  emit(opt, csv.str());
  return 0;
}

int cmd_tddiag(const Options& opt) {
  ProblemFile pf = load_problem(opt.input);
  if (opt.trajectory.empty())
    throw_input("InvalidParameter", "--trajectory is required for tddiag");
  Trajectory traj = load_trajectory_states(opt.trajectory);

  std::vector<ResidualSample> res = tddiag_residual(traj, pf.problem);
  std::ostringstream csv;
  csv << "t,res_gamma,res_alpha\n";
  for (const auto& r : res)
    csv << fmt17(r.t) << ',' << fmt17(r.res_gamma) << ',' << fmt17(r.res_alpha) << '\n';
  emit(opt, csv.str());
  return 0;
}

}  // namespace bogodiag::cli
