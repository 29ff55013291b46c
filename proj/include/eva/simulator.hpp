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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eva/hamiltonian.hpp"

namespace eva {

using Complex = std::complex<double>;

enum class GateKind { H, RX, RZ, CNOT, CH, CRX, CRZ, Toffoli };

std::string to_string(GateKind kind);

/// One gate of the fixed set. Every kind applies a 2x2 base matrix to
/// `target` on the subspace where all controls read 1.
///
/// Toffoli only appears in controlled exponentials; it is simulated exactly
/// and costed as six CNOTs.
struct Gate {
  GateKind kind;
  Qubit target;
  std::array<Qubit, 2> controls{};
  double theta = 0.0;

  static Gate h(Qubit q) { return {GateKind::H, q}; }
  static Gate rx(Qubit q, double theta) { return {GateKind::RX, q, {}, theta}; }
  static Gate rz(Qubit q, double theta) { return {GateKind::RZ, q, {}, theta}; }
  static Gate cnot(Qubit c, Qubit t) { return {GateKind::CNOT, t, {c, 0}}; }
  static Gate ch(Qubit c, Qubit t) { return {GateKind::CH, t, {c, 0}}; }
  static Gate crx(Qubit c, Qubit t, double theta) {
    return {GateKind::CRX, t, {c, 0}, theta};
  }
  static Gate crz(Qubit c, Qubit t, double theta) {
    return {GateKind::CRZ, t, {c, 0}, theta};
  }
  static Gate toffoli(Qubit c1, Qubit c2, Qubit t) {
    return {GateKind::Toffoli, t, {c1, c2}};
  }

  std::size_t num_controls() const noexcept;
  std::span<const Qubit> control_qubits() const noexcept {
    return {controls.data(), num_controls()};
  }
  bool has_angle() const noexcept;
  /// Largest qubit index the gate touches.
  Qubit max_qubit() const noexcept;

  friend bool operator==(const Gate&, const Gate&) = default;
};

using Matrix2 = std::array<Complex, 4>;  // row-major

/// Base single-qubit matrix acting on the target:
///   H  = [[1, 1], [1, -1]] / sqrt(2)
///   RZ = diag(e^{-i theta/2}, e^{i theta/2})
///   RX = [[cos(theta/2), -i sin(theta/2)], [-i sin(theta/2), cos(theta/2)]]
///   X for CNOT and Toffoli.
Matrix2 base_matrix(const Gate& g);

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Throws InvalidInput on out-of-range or colliding qubits, or a
  /// non-finite angle.
  Circuit& append(const Gate& g);
  /// Appends every gate of `other`, which must not be wider than this.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
};

/// Dense state over n qubits; bit q of an amplitude's index is qubit q.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-10;
  static constexpr std::size_t kMaxQubits = 30;

  /// |0...0>
  explicit StateVector(std::size_t n_qubits);
  /// Throws ShapeError on a non power-of-two size and InvalidInput when the
  /// norm is off by more than kNormTolerance.
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const noexcept;
  /// |amplitude|^2 for every basis index.
  std::vector<double> probabilities() const;

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

struct MeasurementCounts {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;

  std::uint64_t total() const noexcept { return zeros + ones; }
  friend bool operator==(const MeasurementCounts&,
                         const MeasurementCounts&) = default;
};

struct QubitProbabilities {
  double p0;
  double p1;
};

void apply_gate(const Gate& g, StateVector& state);

/// Applies the gates of `circuit` to `initial` in order.
StateVector run(const Circuit& circuit, StateVector initial);

/// Marginal outcome probabilities of one qubit, clamped to [0, 1].
QubitProbabilities ancilla_probabilities(const StateVector& state, Qubit qubit);

/// `shots` Bernoulli(p1) draws of one qubit. Draw i depends only on
/// (seed, i).
MeasurementCounts sample_qubit(const StateVector& state, Qubit qubit,
                               std::uint64_t shots, std::uint64_t seed);

/// `shots` full computational-basis outcomes (little-endian indices).
std::vector<std::uint64_t> sample_bitstrings(const StateVector& state,
                                             std::uint64_t shots,
                                             std::uint64_t seed);

/// (zeros - ones) / total. Throws InvalidInput on zero shots.
double p0_minus_p1(const MeasurementCounts& counts);

}  // namespace eva
