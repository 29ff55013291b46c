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

#include "eva/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "eva/errors.hpp"
#include "eva/rng.hpp"
#include "json.hpp"

namespace eva {

namespace {

bool canonical_less(const PauliZTerm& a, const PauliZTerm& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.support().begin(), a.support().end(),
                                      b.support().begin(), b.support().end());
}

double parity_sign(std::uint64_t index, std::uint64_t mask) noexcept {
  return (std::popcount(index & mask) & 1) ? -1.0 : 1.0;
}

}  // namespace

PauliZTerm::PauliZTerm(std::vector<Qubit> support, double coeff)
    : support_(std::move(support)), coeff_(coeff) {
  if (support_.empty() || support_.size() > kMaxDegree) {
    throw InvalidInput("Pauli-Z term support must hold 1 to 3 qubits, got " +
                       std::to_string(support_.size()));
  }
  for (std::size_t i = 1; i < support_.size(); ++i) {
    if (support_[i] <= support_[i - 1]) {
      throw InvalidInput("Pauli-Z term support must be strictly increasing");
    }
  }
  if (support_.back() >= 64) {
    throw InvalidInput("qubit index " + std::to_string(support_.back()) +
                       " exceeds the 64-qubit addressing limit");
  }
  if (!std::isfinite(coeff_)) {
    throw InvalidInput("Pauli-Z term coefficient must be finite");
  }
}

std::uint64_t PauliZTerm::mask() const noexcept {
  std::uint64_t m = 0;
  for (Qubit q : support_) m |= std::uint64_t{1} << q;
  return m;
}

IsingHamiltonian::IsingHamiltonian(std::size_t n_qubits,
                                   std::vector<PauliZTerm> terms)
    : n_qubits_(n_qubits) {
  if (n_qubits_ == 0) throw InvalidInput("Hamiltonian needs at least one qubit");
  if (n_qubits_ > 64) throw InvalidInput("at most 64 qubits are addressable");

  std::map<std::vector<Qubit>, double> merged;
  for (const auto& t : terms) {
    if (t.support().back() >= n_qubits_) {
      throw InvalidInput("term on qubit " + std::to_string(t.support().back()) +
                         " but Hamiltonian has " + std::to_string(n_qubits_) +
                         " qubits");
    }
    merged[{t.support().begin(), t.support().end()}] += t.coeff();
  }
  terms_.reserve(merged.size());
  for (auto& [support, coeff] : merged) {
    if (std::abs(coeff) < kZeroCoeff) continue;
    terms_.emplace_back(support, coeff);
  }
  std::sort(terms_.begin(), terms_.end(), canonical_less);
}

double energy_of_bitstring(const IsingHamiltonian& h,
                           std::span<const std::uint8_t> bits) {
  if (bits.size() != h.n_qubits()) {
    throw ShapeError("bitstring has " + std::to_string(bits.size()) +
                     " bits, Hamiltonian has " + std::to_string(h.n_qubits()) +
                     " qubits");
  }
  double energy = 0.0;
  for (const auto& t : h.terms()) {
    double z = 1.0;
    for (Qubit q : t.support()) z *= bits[q] ? -1.0 : 1.0;
    energy += t.coeff() * z;
  }
  return energy;
}

double energy_of_index(const IsingHamiltonian& h,
                       std::uint64_t index) noexcept {
  double energy = 0.0;
  for (const auto& t : h.terms()) energy += t.coeff() * parity_sign(index, t.mask());
  return energy;
}

std::vector<double> diagonal(const IsingHamiltonian& h) {
  if (h.n_qubits() > 30) {
    throw ResourceError("diagonal of a " + std::to_string(h.n_qubits()) +
                        "-qubit Hamiltonian does not fit in memory");
  }
  const std::uint64_t dim = std::uint64_t{1} << h.n_qubits();
  std::vector<double> diag(dim, 0.0);
  for (const auto& t : h.terms()) {
    const std::uint64_t mask = t.mask();
    const double c = t.coeff();
    for (std::uint64_t x = 0; x < dim; ++x) diag[x] += c * parity_sign(x, mask);
  }
  return diag;
}

HamiltonianNorm hamiltonian_norm(const IsingHamiltonian& h) {
  if (h.n_qubits() > kExactNormMaxQubits) {
    double l1 = 0.0;
    for (const auto& t : h.terms()) l1 += std::abs(t.coeff());
    return {l1, true};
  }
  double best = 0.0;
  for (double e : diagonal(h)) best = std::max(best, std::abs(e));
  return {best, false};
}

NormalizedHamiltonian normalize(const IsingHamiltonian& h) {
  if (h.empty()) throw InvalidInput("cannot normalize an empty Hamiltonian");
  const double norm = hamiltonian_norm(h).value;
  if (norm <= 1.0) return {h, 1.0};
  std::vector<PauliZTerm> scaled;
  scaled.reserve(h.size());
  for (const auto& t : h.terms()) {
    scaled.emplace_back(std::vector<Qubit>(t.support().begin(), t.support().end()),
                        t.coeff() / norm);
  }
  return {IsingHamiltonian(h.n_qubits(), std::move(scaled)), norm};
}

IsingHamiltonian random_ising(std::size_t n, double p, int degree,
                              std::uint64_t seed) {
  if (degree != 2 && degree != 3) {
    throw InvalidInput("degree must be 2 or 3, got " + std::to_string(degree));
  }
  if (n < static_cast<std::size_t>(degree)) {
    throw InvalidInput("need at least " + std::to_string(degree) +
                       " qubits for degree " + std::to_string(degree));
  }
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0, 1]");

  // Two draws per candidate regardless of outcome, so the coefficient of a
  // given support does not depend on which earlier candidates were kept.
  CounterRng rng(seed);
  std::vector<PauliZTerm> terms;
  auto offer = [&](std::vector<Qubit> support) {
    const bool keep = rng.next_uniform() < p;
    const double coeff = rng.next_uniform(-1.0, 1.0);
    if (keep) terms.emplace_back(std::move(support), coeff);
  };
  for (Qubit i = 0; i < n; ++i) offer({i});
  for (Qubit i = 0; i < n; ++i)
    for (Qubit j = i + 1; j < n; ++j) offer({i, j});
  if (degree == 3) {
    for (Qubit i = 0; i < n; ++i)
      for (Qubit j = i + 1; j < n; ++j)
        for (Qubit k = j + 1; k < n; ++k) offer({i, j, k});
  }
  return IsingHamiltonian(n, std::move(terms));
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

IsingHamiltonian parse_hamiltonian(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed Hamiltonian JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("Hamiltonian JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<std::int64_t>() <= 0) {
    throw ParseError("Hamiltonian JSON needs a positive integer \"n\"");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<std::int64_t>());
  if (!doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("Hamiltonian JSON needs a \"terms\" array");
  }

  std::set<std::vector<Qubit>> seen;
  std::vector<PauliZTerm> terms;
  std::size_t idx = 0;
  for (const auto& item : doc["terms"]) {
    const std::string where = "term " + std::to_string(idx++);
    if (!item.is_object() || !item.contains("qubits") ||
        !item["qubits"].is_array() || !item.contains("coeff") ||
        !item["coeff"].is_number()) {
      throw ParseError(where + ": expected {\"qubits\": [...], \"coeff\": number}");
    }
    std::vector<Qubit> support;
    for (const auto& q : item["qubits"]) {
      if (!q.is_number_integer() || q.get<std::int64_t>() < 0) {
        throw ParseError(where + ": qubit indices must be non-negative integers");
      }
      const auto qi = static_cast<Qubit>(q.get<std::int64_t>());
      if (qi >= n) {
        throw ParseError(where + ": qubit index " + std::to_string(qi) +
                         " out of range for n = " + std::to_string(n));
      }
      support.push_back(qi);
    }
    if (!seen.insert(support).second) {
      throw ParseError(where + ": duplicate support");
    }
    try {
      terms.emplace_back(std::move(support), item["coeff"].get<double>());
    } catch (const InvalidInput& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return IsingHamiltonian(n, std::move(terms));
}

std::string serialize_hamiltonian(const IsingHamiltonian& h) {
  std::string out = "{\"n\":" + std::to_string(h.n_qubits()) + ",\"terms\":[";
  bool first = true;
  for (const auto& t : h.terms()) {
    if (!first) out += ',';
    first = false;
    out += "{\"qubits\":[";
    for (std::size_t i = 0; i < t.degree(); ++i) {
      if (i) out += ',';
      out += std::to_string(t.support()[i]);
    }
    out += "],\"coeff\":" + format_double(t.coeff()) + '}';
  }
  out += "]}";
  return out;
}

}  // namespace eva
