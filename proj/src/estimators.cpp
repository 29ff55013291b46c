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

#include "eva/estimators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "eva/errors.hpp"
#include "eva/rng.hpp"

namespace eva {

namespace {

void check_k(double k) {
  if (!std::isfinite(k) || k < 1.0) {
    throw InvalidInput("k must be a finite value >= 1");
  }
}

void check_sizes(const IsingHamiltonian& h, const Ansatz& ansatz) {
  if (h.n_qubits() != ansatz.n_qubits()) {
    throw ShapeError("Hamiltonian has " + std::to_string(h.n_qubits()) +
                     " qubits, ansatz prepares " +
                     std::to_string(ansatz.n_qubits()));
  }
}

double checked_norm(const IsingHamiltonian& h) {
  const double norm = hamiltonian_norm(h).value;
  if (norm > 1.0 + 1e-12) {
    throw InvalidInput("error bounds need a normalized Hamiltonian (norm " +
                       format_double(norm) + ")");
  }
  return norm;
}

double parity_mean(const std::vector<std::uint64_t>& samples,
                   std::uint64_t mask) {
  std::int64_t sum = 0;
  for (std::uint64_t x : samples) sum += (std::popcount(x & mask) & 1) ? -1 : 1;
  return static_cast<double>(sum) / static_cast<double>(samples.size());
}

double parity_expectation(const std::vector<double>& probs,
                          std::uint64_t mask) {
  double s = 0.0;
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    s += (std::popcount(x & mask) & 1) ? -probs[x] : probs[x];
  }
  return s;
}

// Shared tail of both Hadamard-test estimators: run the circuit, read the
// ancilla (analytically or by sampling) and rescale.
EstimateReport hadamard_estimate(Method method, const Circuit& circuit,
                                 const NormalizedHamiltonian& nh, double k,
                                 Shots base_shots, std::uint64_t seed) {
  const Qubit anc = nh.hamiltonian.n_qubits();
  const StateVector out = run(circuit, StateVector(circuit.n_qubits()));

  EstimateReport r;
  r.method = method;
  r.k = k;
  r.seed = seed;
  r.scale = nh.scale;
  r.circuit_count = 1;
  r.exact_probabilities = base_shots.is_exact();
  double diff;
  if (base_shots.is_exact()) {
    const auto p = ancilla_probabilities(out, anc);
    diff = p.p0 - p.p1;
  } else {
    r.shots_used = shots_for_k(base_shots.count(), k);
    diff = p0_minus_p1(sample_qubit(out, anc, r.shots_used, seed));
  }
  r.value = nh.scale * k * diff;
  r.cost = cost_report(circuit, r.shots_used, 1);
  return r;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::eva: return "eva";
    case Method::reduced_eva: return "reduced_eva";
    case Method::vqe_naive: return "vqe_naive";
    case Method::vqe_grouped: return "vqe_grouped";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::exact;
  if (name == "eva") return Method::eva;
  if (name == "reduced_eva" || name == "reduced") return Method::reduced_eva;
  if (name == "vqe_naive") return Method::vqe_naive;
  if (name == "vqe_grouped") return Method::vqe_grouped;
  throw InvalidInput("unknown method \"" + std::string(name) + "\"");
}

Shots Shots::finite(std::uint64_t count) {
  if (count == 0) throw InvalidInput("shot count must be at least 1");
  return Shots(count, false);
}

double exact_expectation(const IsingHamiltonian& h, const Ansatz& ansatz) {
  check_sizes(h, ansatz);
  if (h.n_qubits() > kExactMaxQubits) {
    throw ResourceError("exact expectation limited to " +
                        std::to_string(kExactMaxQubits) + " qubits");
  }
  const auto probs = ansatz.prepare().probabilities();
  const auto energies = diagonal(h);
  return std::inner_product(probs.begin(), probs.end(), energies.begin(), 0.0);
}

double imag_exponential_exact(const IsingHamiltonian& h, const Ansatz& ansatz,
                              double k) {
  check_k(k);
  check_sizes(h, ansatz);
  if (h.n_qubits() > kExactMaxQubits) {
    throw ResourceError("exact expectation limited to " +
                        std::to_string(kExactMaxQubits) + " qubits");
  }
  const auto probs = ansatz.prepare().probabilities();
  const auto energies = diagonal(h);
  double s = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    s += probs[x] * std::sin(energies[x] / k);
  }
  return s;
}

std::uint64_t shots_for_k(std::uint64_t base_shots, double k) {
  check_k(k);
  if (base_shots == 0) throw InvalidInput("base shot count must be at least 1");
  const double v = static_cast<double>(base_shots) * k * k;
  // Absorb representation error so that e.g. 1000 * 1.1^2 gives 1210.
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-9 * v) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(v));
}

double eva_error_bound(const IsingHamiltonian& h, double k) {
  check_k(k);
  const double norm = checked_norm(h);
  return norm * norm * norm / (6.0 * k * k * k);
}

double reduced_error_bound(const IsingHamiltonian& h, double k) {
  check_k(k);
  const double norm = checked_norm(h);
  return norm * norm / (2.0 * k * k);
}

EstimateReport exact_estimate(const IsingHamiltonian& h, const Ansatz& ansatz) {
  EstimateReport r;
  r.method = Method::exact;
  r.value = exact_expectation(h, ansatz);
  r.exact_probabilities = true;
  r.circuit_count = 1;
  r.cost = cost_report(ansatz.circuit(), 0, 1);
  return r;
}

EstimateReport eva_estimate(const IsingHamiltonian& h, const Ansatz& ansatz,
                            double k, Shots base_shots, std::uint64_t seed) {
  check_k(k);
  check_sizes(h, ansatz);
  const auto nh = normalize(h);
  auto r = hadamard_estimate(Method::eva,
                             hadamard_test_circuit(nh.hamiltonian, k, ansatz),
                             nh, k, base_shots, seed);
  r.bound = nh.scale * k * eva_error_bound(nh.hamiltonian, k);
  return r;
}

EstimateReport reduced_eva_estimate(const IsingHamiltonian& h,
                                    const Ansatz& ansatz, double k,
                                    Shots base_shots, std::uint64_t seed) {
  check_k(k);
  check_sizes(h, ansatz);
  if (!validate_single_axis(ansatz)) {
    throw ConstraintError(
        "reduced EVA needs a single-axis ansatz built from RX and CNOT only");
  }
  const auto nh = normalize(h);
  auto r = hadamard_estimate(Method::reduced_eva,
                             reduced_eva_circuit(nh.hamiltonian, k, ansatz), nh,
                             k, base_shots, seed);
  r.bound = nh.scale * k * reduced_error_bound(nh.hamiltonian, k);
  return r;
}

EstimateReport vqe_naive_estimate(const IsingHamiltonian& h,
                                  const Ansatz& ansatz, Shots shots_per_circuit,
                                  std::uint64_t seed) {
  check_sizes(h, ansatz);
  EstimateReport r;
  r.method = Method::vqe_naive;
  r.seed = seed;
  r.exact_probabilities = shots_per_circuit.is_exact();
  r.circuit_count = h.size();

  if (shots_per_circuit.is_exact()) {
    const auto probs = ansatz.prepare().probabilities();
    for (const auto& t : h.terms()) {
      r.value += t.coeff() * parity_expectation(probs, t.mask());
    }
  } else {
    const auto& terms = h.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      // Each term is its own circuit: prepare, measure, discard.
      const auto samples = sample_bitstrings(
          ansatz.prepare(), shots_per_circuit.count(), derive_seed(seed, i));
      r.value += terms[i].coeff() * parity_mean(samples, terms[i].mask());
    }
    r.shots_used = shots_per_circuit.count() * terms.size();
  }
  r.cost = cost_report(ansatz.circuit(), r.shots_used, r.circuit_count);
  return r;
}

EstimateReport vqe_grouped_estimate(const IsingHamiltonian& h,
                                    const Ansatz& ansatz,
                                    Shots shots_per_circuit, std::uint64_t seed) {
  check_sizes(h, ansatz);
  std::vector<PauliString> strings;
  strings.reserve(h.size());
  for (const auto& t : h.terms()) {
    strings.push_back(PauliString::from_term(t, h.n_qubits()));
  }

  EstimateReport r;
  r.method = Method::vqe_grouped;
  r.seed = seed;
  r.exact_probabilities = shots_per_circuit.is_exact();
  if (strings.empty()) {
    r.cost = cost_report(ansatz.circuit(), 0, 0);
    return r;
  }
  const auto groups = group_pauli_strings(strings);
  r.circuit_count = groups.size();

  auto z_mask = [](const PauliString& s) {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < s.letters().size(); ++q) {
      if (s.letters()[q] == PauliLetter::Z) m |= std::uint64_t{1} << q;
    }
    return m;
  };

  std::vector<double> probs;
  if (shots_per_circuit.is_exact()) probs = ansatz.prepare().probabilities();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (shots_per_circuit.is_exact()) {
      for (const auto& s : groups[g]) {
        r.value += s.coeff() * parity_expectation(probs, z_mask(s));
      }
      continue;
    }
    const auto samples = sample_bitstrings(
        ansatz.prepare(), shots_per_circuit.count(), derive_seed(seed, g));
    for (const auto& s : groups[g]) {
      r.value += s.coeff() * parity_mean(samples, z_mask(s));
    }
  }
  if (!shots_per_circuit.is_exact()) {
    r.shots_used = shots_per_circuit.count() * groups.size();
  }
  r.cost = cost_report(ansatz.circuit(), r.shots_used, r.circuit_count);
  return r;
}

PauliString::PauliString(std::vector<PauliLetter> letters, double coeff)
    : letters_(std::move(letters)), coeff_(coeff) {
  if (std::all_of(letters_.begin(), letters_.end(),
                  [](PauliLetter l) { return l == PauliLetter::I; })) {
    throw InvalidInput("Pauli string needs at least one non-identity letter");
  }
}

PauliString PauliString::from_text(std::string_view letters, double coeff) {
  std::vector<PauliLetter> out;
  out.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'I': out.push_back(PauliLetter::I); break;
      case 'X': out.push_back(PauliLetter::X); break;
      case 'Y': out.push_back(PauliLetter::Y); break;
      case 'Z': out.push_back(PauliLetter::Z); break;
      default:
        throw InvalidInput(std::string("invalid Pauli letter '") + c + "'");
    }
  }
  return PauliString(std::move(out), coeff);
}

PauliString PauliString::from_term(const PauliZTerm& term,
                                   std::size_t n_qubits) {
  std::vector<PauliLetter> letters(n_qubits, PauliLetter::I);
  for (Qubit q : term.support()) letters.at(q) = PauliLetter::Z;
  return PauliString(std::move(letters), term.coeff());
}

std::string PauliString::text() const {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (auto l : letters_) s += kChars[static_cast<int>(l)];
  return s;
}

bool qubit_wise_commute(const PauliString& a, const PauliString& b) {
  if (a.letters().size() != b.letters().size()) {
    throw ShapeError("Pauli strings act on different register widths");
  }
  for (std::size_t q = 0; q < a.letters().size(); ++q) {
    const auto x = a.letters()[q], y = b.letters()[q];
    if (x != PauliLetter::I && y != PauliLetter::I && x != y) return false;
  }
  return true;
}

std::vector<std::vector<PauliString>> group_pauli_strings(
    const std::vector<PauliString>& strings) {
  if (strings.empty()) throw InvalidInput("nothing to group");
  std::vector<std::size_t> order(strings.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(strings[a].coeff()) > std::abs(strings[b].coeff());
  });

  std::vector<std::vector<PauliString>> groups;
  for (std::size_t i : order) {
    const auto& s = strings[i];
    auto fits = [&](const std::vector<PauliString>& g) {
      return std::all_of(g.begin(), g.end(), [&](const PauliString& m) {
        return qubit_wise_commute(s, m);
      });
    };
    auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end()) {
      groups.push_back({s});
    } else {
      it->push_back(s);
    }
  }
  return groups;
}

}  // namespace eva
