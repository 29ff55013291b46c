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

#include "eva/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eva/errors.hpp"
#include "eva/rng.hpp"
#include "json.hpp"

namespace eva {

Ansatz::Ansatz(Circuit circuit) : circuit_(std::move(circuit)) {}

StateVector Ansatz::prepare() const {
  return run(circuit_, StateVector(circuit_.n_qubits()));
}

bool validate_single_axis(const Ansatz& ansatz) {
  return std::all_of(ansatz.circuit().gates().begin(),
                     ansatz.circuit().gates().end(), [](const Gate& g) {
                       return g.kind == GateKind::RX || g.kind == GateKind::CNOT;
                     });
}

Ansatz parse_ansatz(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed ansatz JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<std::int64_t>() <= 0) {
    throw ParseError("ansatz JSON needs a positive integer \"n\"");
  }
  if (!doc.contains("gates") || !doc["gates"].is_array()) {
    throw ParseError("ansatz JSON needs a \"gates\" array");
  }
  Circuit circuit(static_cast<std::size_t>(doc["n"].get<std::int64_t>()));

  std::size_t idx = 0;
  for (const auto& item : doc["gates"]) {
    const std::string where = "gate " + std::to_string(idx++);
    auto index = [&](const char* key) -> Qubit {
      if (!item.contains(key) || !item[key].is_number_integer() ||
          item[key].get<std::int64_t>() < 0) {
        throw ParseError(where + ": \"" + key +
                         "\" must be a non-negative integer");
      }
      return static_cast<Qubit>(item[key].get<std::int64_t>());
    };
    auto angle = [&]() -> double {
      if (!item.contains("theta") || !item["theta"].is_number()) {
        throw ParseError(where + ": \"theta\" must be a number");
      }
      return item["theta"].get<double>();
    };
    if (!item.is_object() || !item.contains("gate") || !item["gate"].is_string()) {
      throw ParseError(where + ": expected an object with a \"gate\" name");
    }
    const auto name = item["gate"].get<std::string>();
    try {
      if (name == "RX") {
        circuit.append(Gate::rx(index("qubit"), angle()));
      } else if (name == "RZ") {
        circuit.append(Gate::rz(index("qubit"), angle()));
      } else if (name == "H") {
        circuit.append(Gate::h(index("qubit")));
      } else if (name == "CNOT") {
        circuit.append(Gate::cnot(index("control"), index("target")));
      } else {
        throw ParseError(where + ": unsupported gate \"" + name + "\"");
      }
    } catch (const InvalidInput& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return Ansatz(std::move(circuit));
}

std::string serialize_ansatz(const Ansatz& ansatz) {
  std::string out = "{\"n\":" + std::to_string(ansatz.n_qubits()) + ",\"gates\":[";
  bool first = true;
  for (const auto& g : ansatz.circuit().gates()) {
    if (!first) out += ',';
    first = false;
    switch (g.kind) {
      case GateKind::RX:
      case GateKind::RZ:
        out += "{\"gate\":\"" + to_string(g.kind) +
               "\",\"qubit\":" + std::to_string(g.target) +
               ",\"theta\":" + format_double(g.theta) + '}';
        break;
      case GateKind::H:
        out += "{\"gate\":\"H\",\"qubit\":" + std::to_string(g.target) + '}';
        break;
      case GateKind::CNOT:
        out += "{\"gate\":\"CNOT\",\"control\":" + std::to_string(g.controls[0]) +
               ",\"target\":" + std::to_string(g.target) + '}';
        break;
      default:
        throw InvalidInput(to_string(g.kind) +
                           " has no ansatz JSON representation");
    }
  }
  out += "]}";
  return out;
}

Ansatz random_single_axis_ansatz(std::size_t n_qubits, std::size_t layers,
                                 std::uint64_t seed) {
  CounterRng rng(seed);
  Circuit c(n_qubits);
  for (std::size_t layer = 0; layer < layers; ++layer) {
    for (Qubit q = 0; q < n_qubits; ++q) {
      c.append(Gate::rx(q, rng.next_uniform(-std::numbers::pi, std::numbers::pi)));
    }
    for (Qubit q = 0; q + 1 < n_qubits; ++q) c.append(Gate::cnot(q, q + 1));
  }
  return Ansatz(std::move(c));
}

Circuit exponential_circuit(const IsingHamiltonian& h, double t) {
  if (!std::isfinite(t)) throw InvalidInput("evolution time must be finite");
  Circuit c(h.n_qubits());
  for (const auto& term : h.terms()) {
    const auto s = term.support();
    const double angle = -2.0 * t * term.coeff();
    switch (term.degree()) {
      case 1:
        c.append(Gate::rz(s[0], angle));
        break;
      case 2:
        c.append(Gate::cnot(s[0], s[1]));
        c.append(Gate::rz(s[1], angle));
        c.append(Gate::cnot(s[0], s[1]));
        break;
      case 3:
        // Parity ladder: qubit s[2] carries z_i z_j z_k while the RZ acts.
        c.append(Gate::cnot(s[0], s[1]));
        c.append(Gate::cnot(s[1], s[2]));
        c.append(Gate::rz(s[2], angle));
        c.append(Gate::cnot(s[1], s[2]));
        c.append(Gate::cnot(s[0], s[1]));
        break;
    }
  }
  return c;
}

Circuit controlled_circuit(const Circuit& body, Qubit ancilla) {
  Circuit out(std::max(body.n_qubits(), ancilla + 1));
  for (const auto& g : body.gates()) {
    const auto ctrl = g.control_qubits();
    if (g.target == ancilla ||
        std::find(ctrl.begin(), ctrl.end(), ancilla) != ctrl.end()) {
      throw InvalidInput("ancilla qubit " + std::to_string(ancilla) +
                         " is used by the controlled body");
    }
    switch (g.kind) {
      case GateKind::H: out.append(Gate::ch(ancilla, g.target)); break;
      case GateKind::RX: out.append(Gate::crx(ancilla, g.target, g.theta)); break;
      case GateKind::RZ: out.append(Gate::crz(ancilla, g.target, g.theta)); break;
      case GateKind::CNOT:
        out.append(Gate::toffoli(ancilla, g.controls[0], g.target));
        break;
      default:
        throw ConstraintError("cannot add a control to " + to_string(g.kind));
    }
  }
  return out;
}

namespace {

void check_register(const Circuit& unitary, const Ansatz& ansatz) {
  if (unitary.n_qubits() != ansatz.n_qubits()) {
    throw ShapeError("unitary acts on " + std::to_string(unitary.n_qubits()) +
                     " qubits, ansatz prepares " +
                     std::to_string(ansatz.n_qubits()));
  }
}

void check_k(double k) {
  if (!std::isfinite(k) || k < 1.0) {
    throw InvalidInput("k must be a finite value >= 1");
  }
}

}  // namespace

Circuit imaginary_hadamard_test(const Circuit& unitary, const Ansatz& ansatz) {
  check_register(unitary, ansatz);
  const Qubit anc = ansatz.n_qubits();
  Circuit c(anc + 1);
  c.append(ansatz.circuit());
  c.append(Gate::h(anc));
  c.append(Gate::rz(anc, -std::numbers::pi / 2));
  c.append(controlled_circuit(unitary, anc));
  c.append(Gate::h(anc));
  return c;
}

Circuit hadamard_test_circuit(const IsingHamiltonian& h, double k,
                              const Ansatz& ansatz) {
  check_k(k);
  return imaginary_hadamard_test(exponential_circuit(h, 1.0 / k), ansatz);
}

Circuit reduced_hadamard_test(const Circuit& unitary, const Ansatz& ansatz) {
  check_register(unitary, ansatz);
  const Qubit anc = ansatz.n_qubits();
  Circuit c(anc + 1);
  c.append(ansatz.circuit());
  c.append(Gate::h(anc));
  c.append(Gate::rz(anc, std::numbers::pi / 2));
  for (Qubit q = 0; q < anc; ++q) c.append(Gate::ch(anc, q));
  c.append(unitary);
  for (Qubit q = 0; q < anc; ++q) c.append(Gate::ch(anc, q));
  c.append(Gate::h(anc));
  return c;
}

Circuit reduced_eva_circuit(const IsingHamiltonian& h, double k,
                            const Ansatz& ansatz) {
  check_k(k);
  if (!validate_single_axis(ansatz)) {
    throw ConstraintError(
        "reduced EVA needs a single-axis ansatz built from RX and CNOT only");
  }
  return reduced_hadamard_test(exponential_circuit(h, 1.0 / k), ansatz);
}

CostReport cost_report(const Circuit& circuit, std::uint64_t total_shots,
                       std::uint64_t circuit_count) {
  CostReport r;
  r.circuit_count = circuit_count;
  r.total_shots = total_shots;
  std::vector<std::uint64_t> level(circuit.n_qubits(), 0);
  for (const auto& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::RX:
      case GateKind::RZ: ++r.one_qubit_gates; break;
      case GateKind::CH:
      case GateKind::CRX:
      case GateKind::CRZ: ++r.controlled_one_qubit_gates; break;
      case GateKind::CNOT: ++r.cnot_count; break;
      case GateKind::Toffoli: ++r.toffoli_count; break;
    }
    std::uint64_t layer = level[g.target];
    for (Qubit c : g.control_qubits()) layer = std::max(layer, level[c]);
    ++layer;
    level[g.target] = layer;
    for (Qubit c : g.control_qubits()) level[c] = layer;
    r.depth = std::max(r.depth, layer);
  }
  r.expanded_cnot_count = r.cnot_count + kCnotsPerToffoli * r.toffoli_count;
  return r;
}

}  // namespace eva
