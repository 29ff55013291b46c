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

#include "eva/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eva/errors.hpp"
#include "eva/rng.hpp"

namespace eva {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CH: return "CH";
    case GateKind::CRX: return "CRX";
    case GateKind::CRZ: return "CRZ";
    case GateKind::Toffoli: return "Toffoli";
  }
  return "?";
}

std::size_t Gate::num_controls() const noexcept {
  switch (kind) {
    case GateKind::H:
    case GateKind::RX:
    case GateKind::RZ: return 0;
    case GateKind::Toffoli: return 2;
    default: return 1;
  }
}

bool Gate::has_angle() const noexcept {
  return kind == GateKind::RX || kind == GateKind::RZ ||
         kind == GateKind::CRX || kind == GateKind::CRZ;
}

Qubit Gate::max_qubit() const noexcept {
  Qubit m = target;
  for (Qubit c : control_qubits()) m = std::max(m, c);
  return m;
}

Matrix2 base_matrix(const Gate& g) {
  using namespace std::complex_literals;
  switch (g.kind) {
    case GateKind::H:
    case GateKind::CH: {
      const double s = 1.0 / std::numbers::sqrt2;
      return {s, s, s, -s};
    }
    case GateKind::RX:
    case GateKind::CRX: {
      const double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
      return {c, -1i * s, -1i * s, c};
    }
    case GateKind::RZ:
    case GateKind::CRZ:
      return {std::polar(1.0, -g.theta / 2), 0, 0, std::polar(1.0, g.theta / 2)};
    case GateKind::CNOT:
    case GateKind::Toffoli:
      return {0, 1, 1, 0};
  }
  return {1, 0, 0, 1};
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits_ == 0) throw InvalidInput("circuit needs at least one qubit");
  if (n_qubits_ > 64) throw InvalidInput("at most 64 qubits are addressable");
}

Circuit& Circuit::append(const Gate& g) {
  if (g.max_qubit() >= n_qubits_) {
    throw InvalidInput(to_string(g.kind) + " touches qubit " +
                       std::to_string(g.max_qubit()) + " in a " +
                       std::to_string(n_qubits_) + "-qubit circuit");
  }
  const auto ctrl = g.control_qubits();
  for (std::size_t i = 0; i < ctrl.size(); ++i) {
    if (ctrl[i] == g.target) {
      throw InvalidInput(to_string(g.kind) + ": control equals target");
    }
    for (std::size_t j = i + 1; j < ctrl.size(); ++j) {
      if (ctrl[i] == ctrl[j]) {
        throw InvalidInput(to_string(g.kind) + ": repeated control qubit");
      }
    }
  }
  if (g.has_angle() && !std::isfinite(g.theta)) {
    throw InvalidInput(to_string(g.kind) + ": rotation angle must be finite");
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits() > n_qubits_) {
    throw ShapeError("cannot append a " + std::to_string(other.n_qubits()) +
                     "-qubit circuit to a " + std::to_string(n_qubits_) +
                     "-qubit circuit");
  }
  for (const auto& g : other.gates()) append(g);
  return *this;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits_ == 0 || n_qubits_ > kMaxQubits) {
    throw ResourceError("state vector width must be 1.." +
                        std::to_string(kMaxQubits) + " qubits");
  }
  amps_.assign(std::size_t{1} << n_qubits_, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ == 0 || n_qubits_ > kMaxQubits) {
    throw ResourceError("state vector width must be 1.." +
                        std::to_string(kMaxQubits) + " qubits");
  }
  if (amps_.size() != (std::size_t{1} << n_qubits_)) {
    throw ShapeError("expected " + std::to_string(std::size_t{1} << n_qubits_) +
                     " amplitudes, got " + std::to_string(amps_.size()));
  }
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw InvalidInput("state vector is not normalized");
  }
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

void apply_gate(const Gate& g, StateVector& state) {
  if (g.max_qubit() >= state.n_qubits()) {
    throw ShapeError(to_string(g.kind) + " touches qubit " +
                     std::to_string(g.max_qubit()) + " of a " +
                     std::to_string(state.n_qubits()) + "-qubit state");
  }
  const Matrix2 m = base_matrix(g);
  const std::size_t t = g.target;
  const std::size_t tbit = std::size_t{1} << t;
  std::size_t cmask = 0;
  for (Qubit c : g.control_qubits()) cmask |= std::size_t{1} << c;

  auto amps = state.amplitudes();
  const std::size_t half = amps.size() >> 1;
  for (std::size_t j = 0; j < half; ++j) {
    // Insert a zero at bit position t.
    const std::size_t i0 = ((j >> t) << (t + 1)) | (j & (tbit - 1));
    if ((i0 & cmask) != cmask) continue;
    const std::size_t i1 = i0 | tbit;
    const Complex a0 = amps[i0], a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
}

StateVector run(const Circuit& circuit, StateVector initial) {
  if (circuit.n_qubits() != initial.n_qubits()) {
    throw ShapeError("circuit has " + std::to_string(circuit.n_qubits()) +
                     " qubits, state has " + std::to_string(initial.n_qubits()));
  }
  for (const auto& g : circuit.gates()) apply_gate(g, initial);
  return initial;
}

QubitProbabilities ancilla_probabilities(const StateVector& state,
                                         Qubit qubit) {
  if (qubit >= state.n_qubits()) {
    throw InvalidInput("qubit " + std::to_string(qubit) + " out of range for " +
                       std::to_string(state.n_qubits()) + "-qubit state");
  }
  const std::size_t bit = std::size_t{1} << qubit;
  double p0 = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (!(i & bit)) p0 += std::norm(amps[i]);
  }
  p0 = std::clamp(p0, 0.0, 1.0);
  return {p0, 1.0 - p0};
}

MeasurementCounts sample_qubit(const StateVector& state, Qubit qubit,
                               std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidInput("shots must be at least 1");
  const double p1 = ancilla_probabilities(state, qubit).p1;
  const CounterRng rng(seed);
  MeasurementCounts counts;
  for (std::uint64_t i = 0; i < shots; ++i) {
    if (rng.uniform(i) < p1) {
      ++counts.ones;
    } else {
      ++counts.zeros;
    }
  }
  return counts;
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector& state,
                                             std::uint64_t shots,
                                             std::uint64_t seed) {
  if (shots == 0) throw InvalidInput("shots must be at least 1");
  std::vector<double> cdf = state.probabilities();
  for (std::size_t i = 1; i < cdf.size(); ++i) cdf[i] += cdf[i - 1];
  const double total = cdf.back();

  const CounterRng rng(seed);
  std::vector<std::uint64_t> out(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform(s) * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // u * total can round up to total itself.
    if (it == cdf.end()) --it;
    out[s] = static_cast<std::uint64_t>(it - cdf.begin());
  }
  return out;
}

double p0_minus_p1(const MeasurementCounts& counts) {
  if (counts.total() == 0) throw InvalidInput("no shots recorded");
  return (static_cast<double>(counts.zeros) - static_cast<double>(counts.ones)) /
         static_cast<double>(counts.total());
}

}  // namespace eva
