#pragma once

#include <json.hpp>
#include <string>

#include "bogodiag/dynamics.hpp"
#include "bogodiag/quadratic_model.hpp"
#include "bogodiag/types.hpp"

namespace bogodiag::cli {

using ordered_json = nlohmann::ordered_json;

/// 17-significant-digit formatting used for all CSV output.
std::string fmt17(double v);

// Matrix schema used repo-wide:
// {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
ordered_json matrix_to_json(const cmat& m);
cmat matrix_from_json(const nlohmann::json& j);

// Hamiltonian file: {"h": Matrix, "k": Matrix}
QuadraticHamiltonian load_hamiltonian(const std::string& path);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const ordered_json& j);
void write_text_file(const std::string& path, const std::string& text);

// Dynamics problem file:
// {"n": int, "h": TimeSpec, "K2": TimeSpec, "horizon": T, "dt": dt,
//  "initial": "vacuum" | {"gamma": Matrix, "alpha": Matrix}}
// TimeSpec: {"kind": "constant", "matrix": M}
//         | {"kind": "sinusoidal", "amplitude": M, "omega": w, "phase": p, "base": M?}
//         | {"kind": "sampled", "times": [...], "matrices": [M, ...]}
struct ProblemFile {
  DynamicsProblem problem;
  QuasiFreeState initial;
};
ProblemFile load_problem(const std::string& path);

// Trajectory state dump: {"times": [...], "gamma": [Matrix...], "alpha": [Matrix...]}
void dump_trajectory_states(const std::string& path, const Trajectory& traj);
Trajectory load_trajectory_states(const std::string& path);

std::string trajectory_csv(const Trajectory& traj);

}  // namespace bogodiag::cli
