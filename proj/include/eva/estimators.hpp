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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eva/circuits.hpp"
#include "eva/hamiltonian.hpp"

namespace eva {

enum class Method { exact, eva, reduced_eva, vqe_naive, vqe_grouped };

std::string_view to_string(Method m);
/// Accepts the canonical names plus "reduced" for reduced_eva.
Method parse_method(std::string_view name);

/// Shot budget for a sampled estimator. `exact()` reads outcome
/// probabilities analytically instead of sampling.
class Shots {
 public:
  static constexpr Shots exact() noexcept { return Shots(0, true); }
  static Shots finite(std::uint64_t count);

  bool is_exact() const noexcept { return exact_; }
  /// Zero in exact mode.
  std::uint64_t count() const noexcept { return count_; }

 private:
  constexpr Shots(std::uint64_t count, bool exact) noexcept
      : count_(count), exact_(exact) {}
  std::uint64_t count_;
  bool exact_;
};

struct EstimateReport {
  Method method = Method::exact;
  /// Estimate of <phi|H|phi> in the caller's (unnormalized) units.
  double value = 0.0;
  double k = 1.0;
  /// Total measurement shots over all circuits; 0 in exact mode.
  std::uint64_t shots_used = 0;
  bool exact_probabilities = false;
  std::uint64_t circuit_count = 0;
  CostReport cost;
  /// A-priori bound on |value - <H>|, where one is defined.
  std::optional<double> bound;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

/// sum_x |<x|phi>|^2 E_x. Throws ResourceError above kExactMaxQubits.
inline constexpr std::size_t kExactMaxQubits = 24;
double exact_expectation(const IsingHamiltonian& h, const Ansatz& ansatz);

/// sum_x |<x|phi>|^2 sin(E_x / k) = Im<phi|e^{iH/k}|phi>.
double imag_exponential_exact(const IsingHamiltonian& h, const Ansatz& ansatz,
                              double k);

/// ceil(base_shots * k^2): the budget that keeps the variance of k * (P0-P1)
/// level as k grows.
std::uint64_t shots_for_k(std::uint64_t base_shots, double k);

/// ||H||^3 / (6 k^3), bounding |Im<e^{iH/k}> - <H>/k|. H must be normalized.
double eva_error_bound(const IsingHamiltonian& h, double k);
/// ||H||^2 / (2 k^2), the stated bound on |P0 - P1 - <H>/k| for the reduced
/// circuit. H must be normalized.
double reduced_error_bound(const IsingHamiltonian& h, double k);

EstimateReport exact_estimate(const IsingHamiltonian& h, const Ansatz& ansatz);

/// Normalizes H, runs the controlled-exponential Hadamard test with
/// shots_for_k(base_shots, k) shots and returns scale * k * (P0 - P1).
EstimateReport eva_estimate(const IsingHamiltonian& h, const Ansatz& ansatz,
                            double k, Shots base_shots, std::uint64_t seed);

/// As eva_estimate on the Toffoli-free circuit. Throws ConstraintError for a
/// non single-axis ansatz.
EstimateReport reduced_eva_estimate(const IsingHamiltonian& h,
                                    const Ansatz& ansatz, double k,
                                    Shots base_shots, std::uint64_t seed);

/// One circuit per term, each sampling full bitstrings.
EstimateReport vqe_naive_estimate(const IsingHamiltonian& h,
                                  const Ansatz& ansatz, Shots shots_per_circuit,
                                  std::uint64_t seed);

/// One circuit per qubit-wise commuting group; members share samples.
EstimateReport vqe_grouped_estimate(const IsingHamiltonian& h,
                                    const Ansatz& ansatz,
                                    Shots shots_per_circuit, std::uint64_t seed);

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

/// General Pauli product with a real weight, used by the grouping baseline.
class PauliString {
 public:
  PauliString(std::vector<PauliLetter> letters, double coeff);
  /// "IZXZ"-style text; character q is qubit q.
  static PauliString from_text(std::string_view letters, double coeff);
  static PauliString from_term(const PauliZTerm& term, std::size_t n_qubits);

  const std::vector<PauliLetter>& letters() const noexcept { return letters_; }
  double coeff() const noexcept { return coeff_; }
  std::string text() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<PauliLetter> letters_;
  double coeff_;
};

/// Per qubit the letters agree or one of them is I.
bool qubit_wise_commute(const PauliString& a, const PauliString& b);

/// Greedy first-fit over strings sorted by descending |coeff| (stable).
std::vector<std::vector<PauliString>> group_pauli_strings(
    const std::vector<PauliString>& strings);

}  // namespace eva
