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
#include <string>
#include <string_view>

#include "eva/hamiltonian.hpp"
#include "eva/simulator.hpp"

namespace eva {

/// State-preparation circuit applied to |0...0>.
///
/// Any uncontrolled gate of the fixed set is accepted here; the reduced
/// estimator additionally requires validate_single_axis().
class Ansatz {
 public:
  explicit Ansatz(std::size_t n_qubits) : circuit_(n_qubits) {}
  explicit Ansatz(Circuit circuit);

  std::size_t n_qubits() const noexcept { return circuit_.n_qubits(); }
  const Circuit& circuit() const noexcept { return circuit_; }

  /// Runs the preparation from |0...0>.
  StateVector prepare() const;

 private:
  Circuit circuit_;
};

/// True iff every gate is RX or CNOT. Such circuits keep even-weight basis
/// amplitudes real and odd-weight ones purely imaginary.
bool validate_single_axis(const Ansatz& ansatz);

/// {"n": N, "gates": [{"gate": "RX", "qubit": q, "theta": x} |
///                    {"gate": "CNOT", "control": c, "target": t} | ...]}
/// "H" and "RZ" entries (with "qubit" and, for RZ, "theta") are also read.
Ansatz parse_ansatz(std::string_view json_text);
std::string serialize_ansatz(const Ansatz& ansatz);

/// `layers` rounds of RX(uniform angle) on every qubit followed by a CNOT
/// chain 0->1->...->n-1.
Ansatz random_single_axis_ansatz(std::size_t n_qubits, std::size_t layers,
                                 std::uint64_t seed);

/// Exact e^{iHt} for a diagonal H. Terms are emitted in canonical order:
///   c Z_j          -> RZ_j(-2tc)
///   c Z_k Z_j      -> CNOT(k,j) RZ_j(-2tc) CNOT(k,j)
///   c Z_i Z_j Z_k  -> CNOT(i,j) CNOT(j,k) RZ_k(-2tc) CNOT(j,k) CNOT(i,j)
Circuit exponential_circuit(const IsingHamiltonian& h, double t);

/// Controls every gate of `body` on `ancilla`: RZ/RX/H become CRZ/CRX/CH and
/// CNOT becomes a Toffoli. The result is wide enough to hold the ancilla.
Circuit controlled_circuit(const Circuit& body, Qubit ancilla);

/// Hadamard test for Im<phi|U|phi> with U given as a circuit. The ancilla is
/// qubit n; P(0) - P(1) on it equals Im<phi|U|phi>.
Circuit imaginary_hadamard_test(const Circuit& unitary, const Ansatz& ansatz);

/// Hadamard test on the controlled exponential e^{iH/k}.
Circuit hadamard_test_circuit(const IsingHamiltonian& h, double k,
                              const Ansatz& ansatz);

/// Toffoli-free variant: the ancilla drives controlled-H gates on every
/// register qubit around an uncontrolled U. P(0) - P(1) equals
/// -Im<phi|U^dagger H^n U H^n|phi>, which approaches <H>/k for
/// U = e^{iH/k} and a single-axis ansatz.
Circuit reduced_hadamard_test(const Circuit& unitary, const Ansatz& ansatz);

/// Throws ConstraintError unless the ansatz is single-axis.
Circuit reduced_eva_circuit(const IsingHamiltonian& h, double k,
                            const Ansatz& ansatz);

struct CostReport {
  std::uint64_t circuit_count = 0;
  std::uint64_t one_qubit_gates = 0;
  /// CH, CRX and CRZ.
  std::uint64_t controlled_one_qubit_gates = 0;
  std::uint64_t cnot_count = 0;
  std::uint64_t toffoli_count = 0;
  /// cnot_count + kCnotsPerToffoli * toffoli_count
  std::uint64_t expanded_cnot_count = 0;
  std::uint64_t depth = 0;
  std::uint64_t total_shots = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

inline constexpr std::uint64_t kCnotsPerToffoli = 6;

/// Gate tallies and greedy-layered depth of one circuit. circuit_count and
/// total_shots are echoed from the caller.
CostReport cost_report(const Circuit& circuit, std::uint64_t total_shots,
                       std::uint64_t circuit_count = 1);

}  // namespace eva
