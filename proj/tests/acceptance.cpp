// Copyright 2026 The EVA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance driver: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. The optional argument is the path of the
// eva CLI, used to check bench reproducibility end to end.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "eva/circuits.hpp"
#include "eva/dense_oracle.hpp"
#include "eva/estimators.hpp"
#include "eva/harness.hpp"
#include "eva/rng.hpp"
#include "oracle.hpp"

namespace {

using namespace eva;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

IsingHamiltonian z0() { return IsingHamiltonian(1, {PauliZTerm({0}, 1.0)}); }

// n <= 6, degree 2 or 3, normalized.
IsingHamiltonian corpus_hamiltonian(std::uint64_t seed) {
  CounterRng rng(seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const int degree = rng.next_uniform() < 0.5 ? 2 : 3;
    const auto n = static_cast<std::size_t>(degree) +
                   static_cast<std::size_t>(rng.next_uniform() * (7 - degree));
    auto h = random_ising(n, 0.5, degree, derive_seed(seed, attempt));
    if (!h.empty()) return normalize(h).hamiltonian;
  }
}

Ansatz generic_ansatz(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  Circuit c(n);
  for (Qubit q = 0; q < n; ++q) {
    c.append(Gate::h(q));
    c.append(Gate::rz(q, rng.next_uniform(-pi, pi)));
    c.append(Gate::rx(q, rng.next_uniform(-pi, pi)));
  }
  for (Qubit q = 0; q + 1 < n; ++q) c.append(Gate::cnot(q, q + 1));
  return Ansatz(std::move(c));
}

double ancilla_diff(const Circuit& c) {
  const auto p = ancilla_probabilities(run(c, StateVector(c.n_qubits())), c.n_qubits() - 1);
  return p.p0 - p.p1;
}

Outcome exponential_exactness() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = corpus_hamiltonian(seed);
    for (double t : {0.1, 0.5, 1.0}) {
      const auto got = dense_oracle_unitary(exponential_circuit(h, t));
      const auto want = testing::exp_i_ht(h, t);
      for (Eigen::Index i = 0; i < want.rows(); ++i)
        for (Eigen::Index j = 0; j < want.cols(); ++j)
          worst = std::max(worst, std::abs(got(i, j) - want(i, j)));
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-10 && secs < 30,
          fmt("600 unitaries, max entry error %.3g, %.2f s", worst, secs)};
}

Outcome hadamard_identity() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = corpus_hamiltonian(seed);
    const auto a = generic_ansatz(h.n_qubits(), seed);
    const Eigen::VectorXcd phi = testing::to_eigen(a.prepare());
    const Eigen::MatrixXcd dense = testing::dense_hamiltonian(h);
    for (double k : {1.0, 2.0, 4.0}) {
      double want = 0.0;
      for (Eigen::Index x = 0; x < phi.size(); ++x)
        want += std::norm(phi(x)) * std::sin(dense(x, x).real() / k);
      worst = std::max(worst, std::abs(ancilla_diff(hadamard_test_circuit(h, k, a)) - want));
    }
  }
  return {worst <= 1e-10, fmt("600 circuits, max deviation %.3g", worst)};
}

Outcome cubic_bound() {
  harness::ValidateConfig cfg;
  cfg.check_reduced = false;
  const auto s = harness::validate_bounds(cfg);

  harness::ValidateConfig one;
  one.trials = 1;
  one.ks = {2};
  one.check_reduced = false;
  one.hamiltonian = z0();
  one.ansatz = Ansatz(1);
  const auto& row = harness::validate_bounds(one).rows.front();
  const bool closed = std::abs(row.gap - 0.0205745) <= 1e-6 &&
                      std::abs(row.bound - 0.0208333) <= 1e-6 && row.pass;
  return {s.eva_checks == 800 && s.eva_violations == 0 && closed,
          fmt("%.0f violations in %.0f checks (worst gap/bound %.3f)", s.eva_violations,
              s.eva_checks, s.eva_worst_ratio) +
              fmt("; H=Z k=2 gap %.7f bound %.7f", row.gap, row.bound)};
}

Outcome convergence_rate() {
  auto err = [](double k) {
    return std::abs(eva_estimate(z0(), Ansatz(1), k, Shots::exact(), 0).value - 1.0);
  };
  const double e2 = err(2), e4 = err(4);
  const double ratio = e2 / e4;
  return {std::abs(ratio - 3.96) <= 0.25,
          fmt("error(2) %.7f, error(4) %.7f, ratio %.4f", e2, e4, ratio)};
}

Outcome shot_scaling() {
  const auto t0 = Clock::now();
  harness::SweepConfig cfg;
  cfg.repetitions = 200;
  cfg.base_shots = 1000;
  const auto summary = harness::summarize_sweep(harness::sweep_k(z0(), Ansatz(1), cfg));
  std::map<std::pair<harness::ShotPolicy, double>, double> sd;
  for (const auto& s : summary) sd[{s.policy, s.k}] = s.stddev;
  using harness::ShotPolicy;
  const double fixed = sd[{ShotPolicy::fixed, 8}] / sd[{ShotPolicy::fixed, 1}];
  const double scaled = sd[{ShotPolicy::scaled, 8}] / sd[{ShotPolicy::scaled, 1}];
  const double secs = seconds_since(t0);
  return {fixed > 2 && scaled >= 0.5 && scaled <= 2 && secs < 60,
          fmt("fixed std ratio %.3f, scaled std ratio %.3f, %.2f s", fixed, scaled, secs)};
}

Outcome reduced_eva() {
  CounterRng rng(2026);
  double worst_closed = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double theta = rng.next_uniform(-pi, pi);
    const double gamma = rng.next_uniform(0, 4 * pi);
    // RX(gamma)|0> = alpha|0> + i beta'|1>.
    const double alpha = std::cos(gamma / 2), beta = -std::sin(gamma / 2);
    Circuit rz(1), prep(1);
    rz.append(Gate::rz(0, theta));
    prep.append(Gate::rx(0, gamma));
    const double want = (-alpha * alpha + beta * beta) * std::sin(theta) / 2 +
                        alpha * beta * (std::cos(theta) - 1);
    worst_closed = std::max(
        worst_closed, std::abs(ancilla_diff(reduced_hadamard_test(rz, Ansatz(prep))) - want));
  }

  harness::ValidateConfig cfg;
  cfg.check_eva = false;
  cfg.ks = {2, 4, 8};
  const auto s = harness::validate_bounds(cfg);

  std::uint64_t toffolis = 0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const auto h = corpus_hamiltonian(trial);
    const auto a = random_single_axis_ansatz(h.n_qubits(), 2, trial);
    for (double k : {2.0, 4.0, 8.0}) toffolis += cost_report(reduced_eva_circuit(h, k, a), 0).toffoli_count;
  }

  const bool closed_ok = worst_closed <= 1e-10;
  const bool bound_ok = s.reduced_violations == 0 && s.reduced_checks == 600;
  return {closed_ok && bound_ok && toffolis == 0,
          fmt("closed form max deviation %.3g; ", worst_closed) +
              fmt("bound: %.0f violations in %.0f checks (worst gap/bound %.3f); ",
                  s.reduced_violations, s.reduced_checks, s.reduced_worst_ratio) +
              fmt("Toffolis in 600 reduced circuits: %.0f", static_cast<double>(toffolis))};
}

Outcome cost_counts() {
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = corpus_hamiltonian(seed);
    const auto a = random_single_axis_ansatz(h.n_qubits(), 2, seed);
    const auto e = eva_estimate(h, a, 2, Shots::finite(100), seed);
    const auto r = reduced_eva_estimate(h, a, 2, Shots::finite(100), seed);
    const auto n = vqe_naive_estimate(h, a, Shots::finite(100), seed);
    const auto g = vqe_grouped_estimate(h, a, Shots::finite(100), seed);
    ok &= e.circuit_count == 1 && r.circuit_count == 1;
    ok &= n.circuit_count == h.size() && g.circuit_count == 1;
    ok &= e.cost.expanded_cnot_count == e.cost.cnot_count + 6 * e.cost.toffoli_count;
    ok &= e.cost.toffoli_count == cost_report(exponential_circuit(h, 0.5), 0).cnot_count;
  }
  Circuit t(3);
  t.append(Gate::toffoli(0, 1, 2));
  ok &= cost_report(t, 0).expanded_cnot_count == 6;
  const auto zz = cost_report(hadamard_test_circuit(
                                  IsingHamiltonian(2, {PauliZTerm({0, 1}, 0.5)}), 1, Ansatz(2)),
                              0);
  ok &= zz.toffoli_count == 2 && zz.expanded_cnot_count == 12;
  return {ok, "50 instances: eva/reduced 1 circuit, naive = terms, grouped 1, Toffoli = 6 CNOTs"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string without_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  for (std::string line; std::getline(in, line);) {
    // wall_time_ms is the second-to-last column.
    const auto last = line.rfind(',');
    const auto prev = line.rfind(',', last - 1);
    out << line.substr(0, prev) << line.substr(last) << '\n';
  }
  return out.str();
}

Outcome bench_reproducible(const char* cli) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::current_path() / "acceptance_bench";
  fs::create_directories(dir);
  auto run_cli = [&](const std::string& name, bool timing) -> std::string {
    const auto out = dir / name;
    std::string cmd = std::string("\"") + cli +
                      "\" bench --degree 3 --p 0.5 --qubits 4..12 --instances 3 --seed 7 --out \"" +
                      out.string() + "\"" + (timing ? "" : " --no-timing");
    if (std::system(cmd.c_str()) != 0) return {};
    return slurp(out);
  };
  auto run_lib = [](bool timing) {
    harness::BenchConfig cfg;
    cfg.degree = 3;
    cfg.min_qubits = 4;
    cfg.max_qubits = 12;
    cfg.seed = 7;
    std::ostringstream out;
    harness::write_bench_csv(out, harness::run_bench(cfg), timing);
    return out.str();
  };

  const auto t0 = Clock::now();
  std::string a, b, ta, tb;
  if (cli) {
    a = run_cli("a.csv", false);
    b = run_cli("b.csv", false);
    ta = run_cli("ta.csv", true);
    tb = run_cli("tb.csv", true);
  } else {
    a = run_lib(false);
    b = run_lib(false);
    ta = run_lib(true);
    tb = run_lib(true);
  }
  const double secs = seconds_since(t0);
  if (a.empty() || b.empty() || ta.empty() || tb.empty()) return {false, "bench run failed"};

  std::vector<harness::BenchRecord> rows;
  try {
    std::istringstream in(ta);
    rows = harness::parse_bench_csv(in);
  } catch (const std::exception& e) {
    return {false, std::string("CSV does not parse: ") + e.what()};
  }

  bool schema = rows.size() == 9 * 3 * 4;
  std::map<std::size_t, std::pair<double, int>> naive;
  bool eva_single = true;
  for (const auto& r : rows) {
    schema &= std::abs(r.abs_error - std::abs(r.estimate - r.exact)) <= 1e-12;
    schema &= r.wall_time_ms >= 0;
    if (r.method == Method::vqe_naive) {
      naive[r.n_qubits].first += static_cast<double>(r.circuit_count);
      naive[r.n_qubits].second += 1;
    }
    if (r.method == Method::eva || r.method == Method::reduced_eva) eva_single &= r.circuit_count == 1;
  }
  bool grows = naive.size() == 9;
  double prev = 0.0;
  for (const auto& [n, acc] : naive) {
    const double mean = acc.first / acc.second;
    grows &= mean > prev;
    prev = mean;
  }
  const bool identical = a == b && without_timing(ta) == without_timing(tb) &&
                         without_timing(ta) == without_timing(a);
  return {schema && grows && eva_single && identical,
          fmt("%.0f rows, naive circuits %.1f at n=4 -> %.1f at n=12", static_cast<double>(rows.size()),
              naive.begin()->second.first / naive.begin()->second.second, prev) +
              (eva_single ? ", eva 1 circuit" : ", eva >1 circuit") +
              (identical ? ", identical across runs" : ", runs DIFFER") +
              (cli ? " (CLI" : " (library") + fmt(", %.1f s)", secs)};
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exponential exactness", exponential_exactness},
      {"Hadamard-test identity", hadamard_identity},
      {"cubic error bound", cubic_bound},
      {"convergence rate", convergence_rate},
      {"shot scaling", shot_scaling},
      {"reduced EVA", reduced_eva},
      {"cost counts", cost_counts},
      {"bench reproducibility", [cli] { return bench_reproducible(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %zu %s: %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
