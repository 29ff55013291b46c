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

#include "eva/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "eva/errors.hpp"
#include "eva/rng.hpp"
#include "json.hpp"

namespace eva::harness {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
}

std::string report_to_json(const EstimateReport& r) {
  nlohmann::ordered_json j;
  j["method"] = to_string(r.method);
  j["value"] = r.value;
  j["k"] = r.k;
  if (r.exact_probabilities) {
    j["shots"] = "inf";
  } else {
    j["shots"] = r.shots_used;
  }
  j["circuit_count"] = r.circuit_count;
  j["cost"] = {{"circuit_count", r.cost.circuit_count},
               {"one_qubit_gates", r.cost.one_qubit_gates},
               {"controlled_one_qubit_gates", r.cost.controlled_one_qubit_gates},
               {"cnot_count", r.cost.cnot_count},
               {"toffoli_count", r.cost.toffoli_count},
               {"expanded_cnot_count", r.cost.expanded_cnot_count},
               {"depth", r.cost.depth},
               {"total_shots", r.cost.total_shots}};
  if (r.bound) {
    j["bound"] = *r.bound;
  } else {
    j["bound"] = nullptr;
  }
  j["scale"] = r.scale;
  j["seed"] = r.seed;
  return j.dump();
}

EstimateReport estimate(Method method, const IsingHamiltonian& h,
                        const Ansatz& ansatz, double k, Shots shots,
                        std::uint64_t seed) {
  switch (method) {
    case Method::exact: return exact_estimate(h, ansatz);
    case Method::eva: return eva_estimate(h, ansatz, k, shots, seed);
    case Method::reduced_eva:
      return reduced_eva_estimate(h, ansatz, k, shots, seed);
    case Method::vqe_naive: return vqe_naive_estimate(h, ansatz, shots, seed);
    case Method::vqe_grouped:
      return vqe_grouped_estimate(h, ansatz, shots, seed);
  }
  throw InvalidInput("unknown method");
}

namespace {

std::string fmt(double v) { return format_double(v); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

double parse_double(const std::string& s, const char* column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad number in column ") + column + ": '" + s +
                     "'");
  }
}

std::uint64_t parse_u64(const std::string& s, const char* column) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size() || s.empty() || s[0] == '-') {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad integer in column ") + column + ": '" +
                     s + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------- sweep-k

std::string_view to_string(ShotPolicy p) {
  return p == ShotPolicy::fixed ? "fixed" : "scaled";
}

std::vector<SweepRow> sweep_k(const IsingHamiltonian& h, const Ansatz& ansatz,
                              const SweepConfig& config) {
  if (config.ks.empty()) throw InvalidInput("k list must not be empty");
  if (config.repetitions == 0) throw InvalidInput("need at least one repetition");
  if (config.method != Method::eva && config.method != Method::reduced_eva) {
    throw InvalidInput("sweep-k supports the eva and reduced_eva methods");
  }
  const double exact = exact_expectation(h, ansatz);
  const auto nh = normalize(h);
  std::vector<SweepRow> rows;
  std::uint64_t index = 0;
  for (double k : config.ks) {
    const Circuit circuit =
        config.method == Method::eva
            ? hadamard_test_circuit(nh.hamiltonian, k, ansatz)
            : reduced_eva_circuit(nh.hamiltonian, k, ansatz);
    const StateVector out = run(circuit, StateVector(circuit.n_qubits()));
    for (std::size_t r = 0; r < config.repetitions; ++r) {
      for (ShotPolicy policy : {ShotPolicy::fixed, ShotPolicy::scaled}) {
        const std::uint64_t seed = derive_seed(config.seed, index++);
        const std::uint64_t shots = policy == ShotPolicy::fixed
                                        ? config.base_shots
                                        : shots_for_k(config.base_shots, k);
        const double diff =
            p0_minus_p1(sample_qubit(out, ansatz.n_qubits(), shots, seed));
        const double value = nh.scale * k * diff;
        rows.push_back({policy, k, seed, shots, value, exact,
                        std::abs(value - exact)});
      }
    }
  }
  return rows;
}

std::vector<SweepSummary> summarize_sweep(const std::vector<SweepRow>& rows) {
  std::map<std::pair<int, double>, std::vector<const SweepRow*>> buckets;
  for (const auto& r : rows) {
    buckets[{static_cast<int>(r.policy), r.k}].push_back(&r);
  }
  std::vector<SweepSummary> out;
  for (const auto& [key, members] : buckets) {
    double mean = 0.0;
    for (const auto* m : members) mean += m->estimate;
    mean /= static_cast<double>(members.size());
    double ss = 0.0;
    for (const auto* m : members) ss += (m->estimate - mean) * (m->estimate - mean);
    const double sd = members.size() > 1
                          ? std::sqrt(ss / static_cast<double>(members.size() - 1))
                          : 0.0;
    out.push_back({static_cast<ShotPolicy>(key.first), key.second,
                   members.size(), members.front()->shots, mean, sd});
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.policy) << ',' << fmt(r.k) << ',' << r.seed << ','
        << r.shots << ',' << fmt(r.estimate) << ',' << fmt(r.exact) << ','
        << fmt(r.abs_error) << '\n';
  }
}

void write_sweep_summary_csv(std::ostream& out,
                             const std::vector<SweepSummary>& rows) {
  out << kSweepSummaryCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.policy) << ',' << fmt(r.k) << ',' << r.samples << ','
        << r.shots << ',' << fmt(r.mean) << ',' << fmt(r.stddev) << '\n';
  }
}

// --------------------------------------------------------------- validate

std::string_view to_string(BoundCheck c) {
  return c == BoundCheck::eva ? "eva" : "reduced";
}

namespace {

struct Instance {
  IsingHamiltonian hamiltonian;
  int degree;
};

Instance random_instance(const ValidateConfig& config, std::uint64_t seed) {
  CounterRng rng(seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const int degree = rng.next_uniform() < 0.5 ? 2 : 3;
    // A degree-3 draw needs at least three qubits.
    const std::size_t lo =
        std::max(config.min_qubits, static_cast<std::size_t>(degree));
    const std::size_t span = config.max_qubits - lo + 1;
    const auto n = lo + static_cast<std::size_t>(rng.next_uniform() * span);
    auto h = random_ising(n, config.p, degree, derive_seed(seed, attempt));
    if (!h.empty()) return {normalize(h).hamiltonian, degree};
  }
}

}  // namespace

ValidateSummary validate_bounds(const ValidateConfig& config) {
  if (config.trials == 0) throw InvalidInput("trials must be at least 1");
  if (config.ks.empty()) throw InvalidInput("k list must not be empty");
  if (!config.hamiltonian &&
      (config.min_qubits < 1 || config.max_qubits < 3 ||
       config.max_qubits < config.min_qubits)) {
    throw InvalidInput("qubit range must satisfy 1 <= min <= max and max >= 3");
  }

  ValidateSummary summary;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(config.seed, trial);
    Instance inst = config.hamiltonian
                        ? Instance{normalize(*config.hamiltonian).hamiltonian, 0}
                        : random_instance(config, trial_seed);
    const IsingHamiltonian& h = inst.hamiltonian;
    const Ansatz ansatz =
        config.ansatz ? *config.ansatz
                      : random_single_axis_ansatz(h.n_qubits(),
                                                  config.ansatz_layers,
                                                  derive_seed(trial_seed, ~0ULL));
    const double expectation = exact_expectation(h, ansatz);
    const Qubit anc = h.n_qubits();

    for (double k : config.ks) {
      auto record = [&](BoundCheck check, const Circuit& circuit, double bound) {
        const auto p = ancilla_probabilities(
            run(circuit, StateVector(circuit.n_qubits())), anc);
        const double gap = std::abs(p.p0 - p.p1 - expectation / k);
        const bool pass = gap <= bound + 1e-12;
        summary.rows.push_back({trial, h.n_qubits(), inst.degree, h.size(), k,
                                check, gap, bound, pass});
        const double ratio = bound > 0 ? gap / bound : 0.0;
        if (check == BoundCheck::eva) {
          ++summary.eva_checks;
          summary.eva_violations += !pass;
          summary.eva_worst_ratio = std::max(summary.eva_worst_ratio, ratio);
        } else {
          ++summary.reduced_checks;
          summary.reduced_violations += !pass;
          summary.reduced_worst_ratio =
              std::max(summary.reduced_worst_ratio, ratio);
        }
      };
      if (config.check_eva) {
        record(BoundCheck::eva, hadamard_test_circuit(h, k, ansatz),
               eva_error_bound(h, k));
      }
      if (config.check_reduced && validate_single_axis(ansatz)) {
        record(BoundCheck::reduced, reduced_eva_circuit(h, k, ansatz),
               reduced_error_bound(h, k));
      }
    }
  }
  return summary;
}

void write_validate_csv(std::ostream& out,
                        const std::vector<ValidationRow>& rows) {
  out << kValidateCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.trial << ',' << r.n_qubits << ',' << r.degree << ',' << r.terms
        << ',' << fmt(r.k) << ',' << to_string(r.check) << ',' << fmt(r.gap)
        << ',' << fmt(r.bound) << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

// ------------------------------------------------------------------ bench

std::uint64_t bench_instance_seed(std::uint64_t master, std::size_t n,
                                  std::size_t instance) {
  return derive_seed(derive_seed(master, n), instance);
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.degree != 2 && config.degree != 3) {
    throw InvalidInput("degree must be 2 or 3");
  }
  if (!(config.p > 0.0 && config.p <= 1.0)) {
    throw InvalidInput("p must lie in (0, 1]");
  }
  if (config.min_qubits < static_cast<std::size_t>(config.degree) ||
      config.max_qubits < config.min_qubits) {
    throw InvalidInput("qubit range must satisfy degree <= min <= max");
  }
  if (config.instances == 0) throw InvalidInput("instances must be at least 1");
  if (config.methods.empty()) throw InvalidInput("method list must not be empty");

  std::vector<BenchRecord> rows;
  for (std::size_t n = config.min_qubits; n <= config.max_qubits; ++n) {
    for (std::size_t inst = 0; inst < config.instances; ++inst) {
      const std::uint64_t iseed = bench_instance_seed(config.seed, n, inst);
      IsingHamiltonian h = random_ising(n, config.p, config.degree, iseed);
      for (std::uint64_t retry = 1; h.empty(); ++retry) {
        h = random_ising(n, config.p, config.degree, derive_seed(iseed, retry));
      }
      const Ansatz ansatz = random_single_axis_ansatz(
          n, config.ansatz_layers, derive_seed(iseed, ~0ULL));
      const double exact = exact_expectation(h, ansatz);

      for (std::size_t m = 0; m < config.methods.size(); ++m) {
        const Method method = config.methods[m];
        const std::uint64_t seed = derive_seed(iseed, 1000 + m);
        const auto start = std::chrono::steady_clock::now();
        const auto report = estimate(method, h, ansatz, config.k, config.shots, seed);
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration<double, std::milli>(stop - start).count();

        rows.push_back({method, n, config.degree, config.p, report.k,
                        report.shots_used, report.circuit_count,
                        report.cost.toffoli_count,
                        report.cost.expanded_cnot_count, report.cost.depth,
                        report.value, exact, std::abs(report.value - exact),
                        report.bound, std::max(ms, 0.0), seed});
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows,
                     bool include_timing) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.method) << ',' << r.n_qubits << ',' << r.degree << ','
        << fmt(r.p) << ',' << fmt(r.k) << ',' << r.shots << ','
        << r.circuit_count << ',' << r.toffoli_count << ','
        << r.expanded_cnot_count << ',' << r.depth << ',' << fmt(r.estimate)
        << ',' << fmt(r.exact) << ',' << fmt(r.abs_error) << ','
        << (r.bound ? fmt(*r.bound) : std::string()) << ','
        << fmt(include_timing ? r.wall_time_ms : 0.0) << ',' << r.seed << '\n';
  }
}

std::vector<BenchRecord> parse_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) {
    throw ParseError("bench CSV header mismatch");
  }
  std::vector<BenchRecord> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 16) {
      throw ParseError("bench CSV line " + std::to_string(lineno) + ": expected 16 fields, got " +
                       std::to_string(f.size()));
    }
    BenchRecord r;
    try {
      r.method = parse_method(f[0]);
    } catch (const InvalidInput& e) {
      throw ParseError(e.what());
    }
    r.n_qubits = parse_u64(f[1], "n_qubits");
    r.degree = static_cast<int>(parse_u64(f[2], "degree"));
    r.p = parse_double(f[3], "p");
    r.k = parse_double(f[4], "k");
    r.shots = parse_u64(f[5], "shots");
    r.circuit_count = parse_u64(f[6], "circuit_count");
    r.toffoli_count = parse_u64(f[7], "toffoli_count");
    r.expanded_cnot_count = parse_u64(f[8], "expanded_cnot_count");
    r.depth = parse_u64(f[9], "depth");
    r.estimate = parse_double(f[10], "estimate");
    r.exact = parse_double(f[11], "exact");
    r.abs_error = parse_double(f[12], "abs_error");
    if (!f[13].empty()) r.bound = parse_double(f[13], "bound");
    r.wall_time_ms = parse_double(f[14], "wall_time_ms");
    r.seed = parse_u64(f[15], "seed");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace eva::harness
