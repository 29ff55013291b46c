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

// Command-line front end: estimate | sweep-k | validate | bench.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eva/errors.hpp"
#include "eva/harness.hpp"

namespace {

using namespace eva;

Shots parse_shots(const std::string& text) {
  if (text == "inf") return Shots::exact();
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw InvalidInput("--shots expects a positive integer or 'inf', got '" +
                       text + "'");
  }
  return Shots::finite(v);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidInput("--qubits expects A..B, got '" + text + "'");
  }
}

IsingHamiltonian load_hamiltonian(const std::string& path) {
  return parse_hamiltonian(harness::read_file(path));
}

Ansatz load_ansatz(const std::optional<std::string>& path, std::size_t n) {
  if (!path) return Ansatz(n);
  Ansatz a = parse_ansatz(harness::read_file(*path));
  if (a.n_qubits() != n) {
    throw ShapeError("ansatz prepares " + std::to_string(a.n_qubits()) +
                     " qubits, Hamiltonian has " + std::to_string(n));
  }
  return a;
}

// Writes to --out when given, otherwise to stdout.
void emit(const std::optional<std::string>& out, const std::string& text) {
  if (out) {
    harness::write_file(*out, text);
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-circuit expectation values of diagonal Hamiltonians"};
  app.require_subcommand(1);

  // estimate
  auto* est = app.add_subcommand("estimate", "Run one estimator and print JSON");
  std::string est_h;
  std::optional<std::string> est_a, est_out;
  std::string est_method = "eva", est_shots = "1000";
  double est_k = 2.0;
  std::uint64_t est_seed = 0;
  est->add_option("--hamiltonian", est_h, "Hamiltonian JSON file")->required();
  est->add_option("--ansatz", est_a, "Ansatz JSON file (default |0...0>)");
  est->add_option("--method", est_method,
                  "exact | eva | reduced | vqe_naive | vqe_grouped")
      ->capture_default_str();
  est->add_option("--k", est_k, "Exponent divisor k >= 1")->capture_default_str();
  est->add_option("--shots", est_shots, "Base shots, or 'inf' for exact probabilities")
      ->capture_default_str();
  est->add_option("--seed", est_seed)->capture_default_str();
  est->add_option("--out", est_out, "Write JSON here instead of stdout");

  // sweep-k
  auto* sw = app.add_subcommand("sweep-k", "Estimate spread versus k under both shot policies");
  std::optional<std::string> sw_h, sw_a, sw_out, sw_summary;
  std::string sw_method = "eva";
  std::vector<double> sw_ks{1, 2, 4, 8};
  std::size_t sw_reps = 50;
  std::uint64_t sw_shots = 1000, sw_seed = 0;
  sw->add_option("--hamiltonian", sw_h, "Hamiltonian JSON file (default 1.0*Z0)");
  sw->add_option("--ansatz", sw_a, "Ansatz JSON file (default |0...0>)");
  sw->add_option("--method", sw_method, "eva | reduced")->capture_default_str();
  sw->add_option("--k", sw_ks, "k values")->delimiter(',')->capture_default_str();
  sw->add_option("--repetitions", sw_reps, "Seeds per (k, policy)")->capture_default_str();
  sw->add_option("--shots", sw_shots, "Base shots")->capture_default_str();
  sw->add_option("--seed", sw_seed)->capture_default_str();
  sw->add_option("--out", sw_out, "Row CSV (default stdout)");
  sw->add_option("--summary", sw_summary, "Summary CSV (default stderr)");

  // validate
  auto* va = app.add_subcommand("validate", "Check the a-priori error bounds on random instances");
  std::size_t va_trials = 200;
  std::string va_qubits = "2..8", va_check = "both";
  double va_p = 0.5;
  std::vector<double> va_ks{1, 2, 4, 8};
  std::optional<std::string> va_h, va_a, va_out;
  std::uint64_t va_seed = 0;
  va->add_option("--trials", va_trials)->capture_default_str();
  va->add_option("--qubits", va_qubits, "Register width range A..B")->capture_default_str();
  va->add_option("--p", va_p, "Term inclusion probability")->capture_default_str();
  va->add_option("--k", va_ks, "k values")->delimiter(',')->capture_default_str();
  va->add_option("--check", va_check, "eva | reduced | both")->capture_default_str();
  va->add_option("--hamiltonian", va_h, "Use this Hamiltonian in every trial");
  va->add_option("--ansatz", va_a, "Use this ansatz in every trial");
  va->add_option("--seed", va_seed)->capture_default_str();
  va->add_option("--out", va_out, "Per-check CSV");

  // bench
  auto* be = app.add_subcommand("bench", "Benchmark estimators on random Hamiltonians");
  int be_degree = 2;
  double be_p = 0.5, be_k = 2.0;
  std::string be_qubits = "4..8", be_shots = "1000";
  std::size_t be_instances = 3, be_layers = 2;
  std::vector<std::string> be_methods{"eva", "reduced_eva", "vqe_naive", "vqe_grouped"};
  std::uint64_t be_seed = 0;
  std::optional<std::string> be_out;
  bool be_no_timing = false;
  be->add_option("--degree", be_degree, "2 or 3")->capture_default_str();
  be->add_option("--p", be_p, "Term inclusion probability")->capture_default_str();
  be->add_option("--qubits", be_qubits, "Register width range A..B")->capture_default_str();
  be->add_option("--instances", be_instances, "Random instances per width")->capture_default_str();
  be->add_option("--method", be_methods, "Methods to run")->delimiter(',');
  be->add_option("--k", be_k)->capture_default_str();
  be->add_option("--shots", be_shots, "Base shots, or 'inf'")->capture_default_str();
  be->add_option("--layers", be_layers, "Ansatz layers")->capture_default_str();
  be->add_option("--seed", be_seed, "Master seed")->capture_default_str();
  be->add_option("--out", be_out, "CSV file (default stdout)");
  be->add_flag("--no-timing", be_no_timing, "Write 0 for wall_time_ms");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*est) {
      const auto h = load_hamiltonian(est_h);
      const auto a = load_ansatz(est_a, h.n_qubits());
      const auto report = harness::estimate(parse_method(est_method), h, a, est_k,
                                            parse_shots(est_shots), est_seed);
      emit(est_out, harness::report_to_json(report) + "\n");
      return 0;
    }

    if (*sw) {
      const auto h = sw_h ? load_hamiltonian(*sw_h)
                          : IsingHamiltonian(1, {PauliZTerm({0}, 1.0)});
      const auto a = load_ansatz(sw_a, h.n_qubits());
      harness::SweepConfig cfg;
      cfg.method = parse_method(sw_method);
      cfg.ks = sw_ks;
      cfg.repetitions = sw_reps;
      cfg.base_shots = sw_shots;
      cfg.seed = sw_seed;
      const auto rows = harness::sweep_k(h, a, cfg);
      std::ostringstream rows_csv, summary_csv;
      harness::write_sweep_csv(rows_csv, rows);
      harness::write_sweep_summary_csv(summary_csv, harness::summarize_sweep(rows));
      emit(sw_out, rows_csv.str());
      if (sw_summary) {
        harness::write_file(*sw_summary, summary_csv.str());
      } else {
        std::cerr << summary_csv.str();
      }
      return 0;
    }

    if (*va) {
      harness::ValidateConfig cfg;
      cfg.trials = va_trials;
      std::tie(cfg.min_qubits, cfg.max_qubits) = parse_range(va_qubits);
      cfg.p = va_p;
      cfg.ks = va_ks;
      cfg.seed = va_seed;
      if (va_check == "eva") {
        cfg.check_reduced = false;
      } else if (va_check == "reduced") {
        cfg.check_eva = false;
      } else if (va_check != "both") {
        throw InvalidInput("--check expects eva, reduced or both");
      }
      if (va_h) cfg.hamiltonian = load_hamiltonian(*va_h);
      if (va_a) {
        if (!cfg.hamiltonian) {
          throw InvalidInput("--ansatz requires --hamiltonian for validate");
        }
        cfg.ansatz = load_ansatz(va_a, cfg.hamiltonian->n_qubits());
      }
      const auto summary = harness::validate_bounds(cfg);
      if (va_out) {
        std::ostringstream csv;
        harness::write_validate_csv(csv, summary.rows);
        harness::write_file(*va_out, csv.str());
      }
      if (summary.rows.size() == 1) {
        const auto& r = summary.rows.front();
        std::cout << to_string(r.check) << " gap " << format_double(r.gap)
                  << " bound " << format_double(r.bound)
                  << (r.pass ? " pass\n" : " FAIL\n");
      }
      if (cfg.check_eva) {
        std::cout << "eva bound: " << summary.eva_violations << " violations in "
                  << summary.eva_checks << " checks (worst gap/bound "
                  << format_double(summary.eva_worst_ratio) << ")\n";
      }
      if (cfg.check_reduced) {
        std::cout << "reduced bound: " << summary.reduced_violations
                  << " violations in " << summary.reduced_checks
                  << " checks (worst gap/bound "
                  << format_double(summary.reduced_worst_ratio) << ")\n";
      }
      return summary.violations() == 0 ? 0 : 1;
    }

    if (*be) {
      harness::BenchConfig cfg;
      std::tie(cfg.min_qubits, cfg.max_qubits) = parse_range(be_qubits);
      cfg.degree = be_degree;
      cfg.p = be_p;
      cfg.instances = be_instances;
      cfg.methods.clear();
      for (const auto& m : be_methods) cfg.methods.push_back(parse_method(m));
      cfg.k = be_k;
      cfg.shots = parse_shots(be_shots);
      cfg.ansatz_layers = be_layers;
      cfg.seed = be_seed;
      std::ostringstream csv;
      harness::write_bench_csv(csv, harness::run_bench(cfg), !be_no_timing);
      emit(be_out, csv.str());
      return 0;
    }
  } catch (const eva::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
