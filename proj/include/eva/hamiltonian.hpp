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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eva {

using Qubit = std::size_t;

/// Weighted product of Pauli-Z operators on up to three distinct qubits.
///
/// The support is kept strictly increasing. A term knows nothing about the
/// register width; IsingHamiltonian checks indices against it.
class PauliZTerm {
 public:
  static constexpr std::size_t kMaxDegree = 3;

  PauliZTerm(std::vector<Qubit> support, double coeff);

  std::span<const Qubit> support() const noexcept { return support_; }
  double coeff() const noexcept { return coeff_; }
  std::size_t degree() const noexcept { return support_.size(); }

  /// Bit mask with bit q set for every q in the support.
  std::uint64_t mask() const noexcept;

  friend bool operator==(const PauliZTerm&, const PauliZTerm&) = default;

 private:
  std::vector<Qubit> support_;
  double coeff_;
};

/// Diagonal Hamiltonian sum_t c_t prod_{q in t} Z_q.
///
/// Construction merges terms with equal support by adding coefficients, drops
/// terms whose merged magnitude is below kZeroCoeff, and sorts the result into
/// canonical order (by degree, then lexicographically by support).
class IsingHamiltonian {
 public:
  static constexpr double kZeroCoeff = 1e-15;

  IsingHamiltonian(std::size_t n_qubits, std::vector<PauliZTerm> terms);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliZTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const IsingHamiltonian&,
                         const IsingHamiltonian&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<PauliZTerm> terms_;
};

struct NormalizedHamiltonian {
  IsingHamiltonian hamiltonian;
  /// Divisor applied to every coefficient; original = scale * normalized.
  double scale;
};

struct HamiltonianNorm {
  double value;
  /// True when `value` is the L1 bound sum |c_t| rather than the exact maximum.
  bool is_upper_bound;
};

/// Registers up to this width get an exact norm by enumeration.
inline constexpr std::size_t kExactNormMaxQubits = 20;

/// Bit b maps to the Z eigenvalue 1 - 2b.
double energy_of_bitstring(const IsingHamiltonian& h,
                           std::span<const std::uint8_t> bits);

/// Energy of the basis state whose little-endian index is `index`.
double energy_of_index(const IsingHamiltonian& h, std::uint64_t index) noexcept;

/// All 2^n diagonal entries, indexed little-endian.
std::vector<double> diagonal(const IsingHamiltonian& h);

/// max_phi |<phi|H|phi>|, which for a diagonal operator is the largest
/// |energy| over basis states. Falls back to sum |c_t| above
/// kExactNormMaxQubits.
HamiltonianNorm hamiltonian_norm(const IsingHamiltonian& h);

/// Divides by the norm when it exceeds one. Throws InvalidInput when empty.
NormalizedHamiltonian normalize(const IsingHamiltonian& h);

/// Random instance over every support of size 1..degree. Each candidate is
/// kept with probability p and gets a coefficient uniform on [-1, 1].
IsingHamiltonian random_ising(std::size_t n, double p, int degree,
                              std::uint64_t seed);

/// {"n": N, "terms": [{"qubits": [...], "coeff": c}, ...]}
IsingHamiltonian parse_hamiltonian(std::string_view json_text);
std::string serialize_hamiltonian(const IsingHamiltonian& h);

/// "%.17g" rendering shared by every text format the library writes.
std::string format_double(double value);

}  // namespace eva
