#include <CLI11.hpp>
#include <functional>
#include <iostream>

#include "bogodiag/errors.hpp"
#include "bogodiag_cli/commands.hpp"

using bogodiag::cli::Options;

int main(int argc, char** argv) {
  CLI::App app{"bogodiag: bosonic quadratic Hamiltonians - condition checks, Bogoliubov "
               "diagonalization, quasi-free dynamics, and brute-force Fock-space oracles"};
  app.require_subcommand(1);

  Options opt;
  std::function<int(const Options&)> run;
  std::vector<CLI::Option*> seed_opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", opt.input, "input JSON file");
    sub->add_option("-o,--output", opt.output, "output file (stdout if omitted)");
    sub->add_option("--cutoff", opt.cutoff, "total-occupation cutoff for Fock-space commands");
    sub->add_option("--count", opt.count, "instance or level count");
    sub->add_option("--dt", opt.dt, "time step override");
    sub->add_option("--horizon", opt.horizon, "time horizon override");
    sub->add_option("--tol", opt.tol, "tolerance override");
    seed_opts.push_back(
        sub->add_option("--seed", opt.seed, "RNG seed (required for randomized commands)"));
    return sub;
  };

  auto wire = [&](const char* name, const char* desc, int (*fn)(const Options&),
                  bool needs_input) {
    CLI::App* sub = add_common(app.add_subcommand(name, desc));
    if (needs_input) sub->get_option("--input")->required();
    sub->final_callback([&run, fn]() { run = fn; });
    return sub;
  };

  wire("diagonalize", "diagonalize an instance and emit the result JSON",
       bogodiag::cli::cmd_diagonalize, true);
  wire("spectrum", "compare dense Fock eigenvalues with the quasiparticle ladder",
       bogodiag::cli::cmd_spectrum, true);
  wire("evolve", "integrate the density-matrix evolution and emit the trajectory CSV",
       bogodiag::cli::cmd_evolve, true)
      ->add_option("--dump-states", opt.dump_states, "write per-sample matrices as JSON");
  wire("oracle", "dense Fock-space report: assembly identity, density matrices, moments",
       bogodiag::cli::cmd_oracle, true);
  wire("verify", "run every invariant suite on an instance; nonzero exit on violation",
       bogodiag::cli::cmd_verify, true);
  wire("example", "compare the generic diagonalizer against diagonal closed forms",
       bogodiag::cli::cmd_example, false);
  wire("probe", "numeric report on the two-sided quadratic-form bounds (no assertion)",
       bogodiag::cli::cmd_probe, false);
  wire("tddiag", "evaluate evolution-equation residuals along a stored trajectory",
       bogodiag::cli::cmd_tddiag, true)
      ->add_option("--trajectory", opt.trajectory, "state dump produced by evolve")
      ->required();

  CLI11_PARSE(app, argc, argv);
  for (const CLI::Option* s : seed_opts)
    if (s->count() > 0) opt.has_seed = true;

  try {
    return run(opt);
  } catch (const bogodiag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == bogodiag::ErrorKind::input ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
