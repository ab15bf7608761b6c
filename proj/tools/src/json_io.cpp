#include "bogodiag_cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bogodiag/errors.hpp"
#include "bogodiag/linalg.hpp"

namespace bogodiag::cli {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json matrix_to_json(const cmat& m) {
  ordered_json data = ordered_json::array();
  for (index_t r = 0; r < m.rows(); ++r)
    for (index_t c = 0; c < m.cols(); ++c)
      data.push_back({m(r, c).real(), m(r, c).imag()});
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

cmat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw_input("InvalidParameter", "matrix object needs rows, cols, data");
  const auto rows = j.at("rows").get<index_t>();
  const auto cols = j.at("cols").get<index_t>();
  const auto& data = j.at("data");
  if (rows < 1 || cols < 1) throw_input("InvalidParameter", "matrix must be nonempty");
  if (!data.is_array() || data.size() != static_cast<size_t>(rows * cols))
    throw_input("InvalidParameter", "matrix data length must equal rows*cols");
  cmat m(rows, cols);
  size_t idx = 0;
  for (index_t r = 0; r < rows; ++r)
    for (index_t c = 0; c < cols; ++c, ++idx) {
      const auto& e = data.at(idx);
      if (!e.is_array() || e.size() != 2)
        throw_input("InvalidParameter", "matrix entries are [re, im] pairs");
      m(r, c) = complexd(e.at(0).get<double>(), e.at(1).get<double>());
    }
  if (!all_finite(m)) throw_input("InvalidParameter", "matrix entries must be finite");
  return m;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_input("InvalidParameter", "cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw_input("InvalidParameter", "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw_input("InvalidParameter", "cannot write file: " + path);
  out << j.dump(2) << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw_input("InvalidParameter", "cannot write file: " + path);
  out << text;
}

QuadraticHamiltonian load_hamiltonian(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  if (!j.contains("h") || !j.contains("k"))
    throw_input("InvalidParameter", "hamiltonian file needs \"h\" and \"k\"");
  return validate_hamiltonian(matrix_from_json(j.at("h")), matrix_from_json(j.at("k")));
}

namespace {

TimeMatrix time_spec(const nlohmann::json& j, index_t n) {
  if (!j.is_object() || !j.contains("kind"))
    throw_input("InvalidParameter", "time spec needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    cmat m = matrix_from_json(j.at("matrix"));
    if (m.rows() != n) throw_input("DimensionMismatch", "time spec matrix size mismatch");
    return [m](double) { return m; };
  }
  if (kind == "sinusoidal") {
    cmat amp = matrix_from_json(j.at("amplitude"));
    cmat base = j.contains("base") ? matrix_from_json(j.at("base"))
                                   : cmat(cmat::Zero(amp.rows(), amp.cols()));
    double omega = j.value("omega", 1.0);
    double phase = j.value("phase", 0.0);
    if (amp.rows() != n) throw_input("DimensionMismatch", "time spec matrix size mismatch");
    return [amp, base, omega, phase](double t) -> cmat {
      return base + std::sin(omega * t + phase) * amp;
    };
  }
  if (kind == "sampled") {
    std::vector<double> ts = j.at("times").get<std::vector<double>>();
    std::vector<cmat> ms;
    for (const auto& mj : j.at("matrices")) ms.push_back(matrix_from_json(mj));
    if (ts.size() != ms.size() || ts.size() < 2)
      throw_input("InvalidParameter", "sampled spec needs matching times/matrices, length >= 2");
    for (size_t i = 1; i < ts.size(); ++i)
      if (ts[i] <= ts[i - 1]) throw_input("InvalidParameter", "sample times must increase");
    if (ms.front().rows() != n) throw_input("DimensionMismatch", "time spec matrix size mismatch");
    return [ts, ms](double t) -> cmat {
      if (t <= ts.front()) return ms.front();
      if (t >= ts.back()) return ms.back();
      size_t hi = 1;
      while (ts[hi] < t) ++hi;
      double w = (t - ts[hi - 1]) / (ts[hi] - ts[hi - 1]);
      return (1.0 - w) * ms[hi - 1] + w * ms[hi];
    };
  }
  throw_input("InvalidParameter", "unknown time spec kind: " + kind);
}

}  // namespace

ProblemFile load_problem(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  for (const char* key : {"n", "h", "K2", "horizon", "dt"})
    if (!j.contains(key)) throw_input("InvalidParameter", std::string("problem file needs \"") + key + '"');

  ProblemFile pf;
  pf.problem.n = j.at("n").get<index_t>();
  pf.problem.h_of_t = time_spec(j.at("h"), pf.problem.n);
  pf.problem.k2_of_t = time_spec(j.at("K2"), pf.problem.n);
  pf.problem.horizon = j.at("horizon").get<double>();
  pf.problem.dt = j.at("dt").get<double>();

  if (!j.contains("initial") || (j.at("initial").is_string() && j.at("initial") == "vacuum")) {
    pf.initial = vacuum_state(pf.problem.n);
  } else {
    const auto& init = j.at("initial");
    pf.initial.n = pf.problem.n;
    pf.initial.gamma = matrix_from_json(init.at("gamma"));
    pf.initial.alpha = matrix_from_json(init.at("alpha"));
  }
  return pf;
}

void dump_trajectory_states(const std::string& path, const Trajectory& traj) {
  ordered_json j;
  j["times"] = traj.times;
  ordered_json gammas = ordered_json::array();
  ordered_json alphas = ordered_json::array();
  for (const auto& s : traj.states) {
    gammas.push_back(matrix_to_json(s.gamma));
    alphas.push_back(matrix_to_json(s.alpha));
  }
  j["gamma"] = std::move(gammas);
  j["alpha"] = std::move(alphas);
  write_json_file(path, j);
}

Trajectory load_trajectory_states(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  Trajectory traj;
  traj.times = j.at("times").get<std::vector<double>>();
  const auto& gammas = j.at("gamma");
  const auto& alphas = j.at("alpha");
  if (gammas.size() != traj.times.size() || alphas.size() != traj.times.size())
    throw_input("InvalidParameter", "trajectory arrays must have equal length");
  for (size_t i = 0; i < traj.times.size(); ++i) {
    QuasiFreeState s;
    s.gamma = matrix_from_json(gammas.at(i));
    s.alpha = matrix_from_json(alphas.at(i));
    s.n = s.gamma.rows();
    traj.states.push_back(std::move(s));
  }
  return traj;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "t,norm_X,norm_Y,herm_defect,symm_defect,tr_gamma,energy\n";
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const auto& m = traj.monitors[i];
    out << fmt17(traj.times[i]) << ',' << fmt17(m.norm_x) << ',' << fmt17(m.norm_y) << ','
        << fmt17(m.herm_defect) << ',' << fmt17(m.symm_defect) << ',' << fmt17(m.tr_gamma) << ','
        << fmt17(m.energy) << '\n';
  }
  return out.str();
}

}  // namespace bogodiag::cli
