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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eva/circuits.hpp"
#include "eva/estimators.hpp"
#include "eva/hamiltonian.hpp"

namespace eva::harness {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// One JSON object describing an estimate.
std::string report_to_json(const EstimateReport& report);

/// Dispatches to the estimator for `method`.
EstimateReport estimate(Method method, const IsingHamiltonian& h,
                        const Ansatz& ansatz, double k, Shots shots,
                        std::uint64_t seed);

// ---------------------------------------------------------------- sweep-k

enum class ShotPolicy { fixed, scaled };
std::string_view to_string(ShotPolicy p);

struct SweepConfig {
  Method method = Method::eva;  // eva or reduced_eva
  std::vector<double> ks{1, 2, 4, 8};
  std::size_t repetitions = 50;
  std::uint64_t base_shots = 1000;
  std::uint64_t seed = 0;
};

struct SweepRow {
  ShotPolicy policy;
  double k;
  std::uint64_t seed;
  std::uint64_t shots;
  double estimate;
  double exact;
  double abs_error;
};

struct SweepSummary {
  ShotPolicy policy;
  double k;
  std::size_t samples;
  std::uint64_t shots;
  double mean;
  /// Sample standard deviation (n - 1 denominator).
  double stddev;
};

/// For every k, every repetition and both shot policies, one estimate.
/// The fixed policy spends base_shots at every k; the scaled policy spends
/// shots_for_k(base_shots, k).
std::vector<SweepRow> sweep_k(const IsingHamiltonian& h, const Ansatz& ansatz,
                              const SweepConfig& config);
std::vector<SweepSummary> summarize_sweep(const std::vector<SweepRow>& rows);

inline constexpr const char* kSweepCsvHeader =
    "policy,k,seed,shots,estimate,exact,abs_error";
inline constexpr const char* kSweepSummaryCsvHeader =
    "policy,k,samples,shots,mean,std";
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_summary_csv(std::ostream& out,
                             const std::vector<SweepSummary>& rows);

// --------------------------------------------------------------- validate

enum class BoundCheck { eva, reduced };
std::string_view to_string(BoundCheck c);

struct ValidateConfig {
  std::size_t trials = 200;
  /// Degree-3 draws start at three qubits regardless.
  std::size_t min_qubits = 2;
  std::size_t max_qubits = 8;
  double p = 0.5;
  std::vector<double> ks{1, 2, 4, 8};
  bool check_eva = true;
  bool check_reduced = true;
  std::size_t ansatz_layers = 2;
  std::uint64_t seed = 0;
  /// When set, every trial uses this Hamiltonian (normalized first).
  std::optional<IsingHamiltonian> hamiltonian;
  /// When set, every trial uses this ansatz.
  std::optional<Ansatz> ansatz;
};

struct ValidationRow {
  std::size_t trial;
  std::size_t n_qubits;
  int degree;  // 0 when the Hamiltonian was supplied
  std::size_t terms;
  double k;
  BoundCheck check;
  /// |P0 - P1 - <H>/k| with H normalized, from exact ancilla probabilities.
  double gap;
  double bound;
  bool pass;
};

struct ValidateSummary {
  std::vector<ValidationRow> rows;
  std::size_t eva_checks = 0;
  std::size_t eva_violations = 0;
  std::size_t reduced_checks = 0;
  std::size_t reduced_violations = 0;
  /// Largest gap / bound observed per check kind.
  double eva_worst_ratio = 0.0;
  double reduced_worst_ratio = 0.0;

  std::size_t violations() const noexcept {
    return eva_violations + reduced_violations;
  }
};

/// Random normalized Hamiltonians and single-axis ansatz states, checked
/// against both a-priori bounds in exact-probability mode. Throws
/// InvalidInput for zero trials.
ValidateSummary validate_bounds(const ValidateConfig& config);

inline constexpr const char* kValidateCsvHeader =
    "trial,n_qubits,degree,terms,k,check,gap,bound,pass";
void write_validate_csv(std::ostream& out,
                        const std::vector<ValidationRow>& rows);

// ------------------------------------------------------------------ bench

struct BenchConfig {
  std::size_t min_qubits = 4;
  std::size_t max_qubits = 8;
  int degree = 2;
  double p = 0.5;
  std::size_t instances = 3;
  std::vector<Method> methods{Method::eva, Method::reduced_eva,
                              Method::vqe_naive, Method::vqe_grouped};
  double k = 2.0;
  Shots shots = Shots::finite(1000);
  std::size_t ansatz_layers = 2;
  std::uint64_t seed = 0;
};

struct BenchRecord {
  Method method;
  std::size_t n_qubits;
  int degree;
  double p;
  double k;
  std::uint64_t shots;
  std::uint64_t circuit_count;
  std::uint64_t toffoli_count;
  std::uint64_t expanded_cnot_count;
  std::uint64_t depth;
  double estimate;
  double exact;
  double abs_error;
  std::optional<double> bound;
  double wall_time_ms;
  std::uint64_t seed;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Seed of instance `instance` at width `n`, derived from the master seed.
std::uint64_t bench_instance_seed(std::uint64_t master, std::size_t n,
                                  std::size_t instance);

/// Rows sorted by (n_qubits, instance, method order in the config). Wall
/// time covers the estimator call only.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "method,n_qubits,degree,p,k,shots,circuit_count,toffoli_count,"
    "expanded_cnot_count,depth,estimate,exact,abs_error,bound,wall_time_ms,"
    "seed";

/// `include_timing = false` writes 0 in the wall_time_ms column so that runs
/// can be compared byte for byte.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows,
                     bool include_timing = true);
/// Throws ParseError on a header mismatch or a malformed row.
std::vector<BenchRecord> parse_bench_csv(std::istream& in);

}  // namespace eva::harness
