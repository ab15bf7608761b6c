#pragma once

#include <cstdint>
#include <string>

namespace bogodiag::cli {

struct Options {
  std::string input;
  std::string output;
  std::string trajectory;   // tddiag: state-dump file produced by evolve
  std::string dump_states;  // evolve: optional per-sample matrix dump
  int cutoff = 40;
  int count = 0;
  double dt = 0.0;          // 0 = take from the problem file
  double horizon = 0.0;     // 0 = take from the problem file
  double tol = 0.0;         // 0 = command default
  std::uint64_t seed = 0;
  bool has_seed = false;
};

// exit codes: 0 success, 1 violation, 2 bad input, 3 numeric failure
int cmd_diagonalize(const Options& opt);
int cmd_spectrum(const Options& opt);
int cmd_evolve(const Options& opt);
int cmd_oracle(const Options& opt);
int cmd_verify(const Options& opt);
int cmd_example(const Options& opt);
int cmd_probe(const Options& opt);
int cmd_tddiag(const Options& opt);

/// thread cap from BOGODIAG_THREADS (>= 1)
int thread_limit();

}  // namespace bogodiag::cli
