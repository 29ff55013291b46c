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

#include "eva/dense_oracle.hpp"

#include <map>

#include "eva/errors.hpp"

namespace eva {

namespace {

using Eigen::MatrixXcd;

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixXcd to_eigen(const Matrix2& m) {
  MatrixXcd out(2, 2);
  out << m[0], m[1], m[2], m[3];
  return out;
}

// Tensor product over all qubits with the given per-qubit factors and the
// identity elsewhere. Qubit 0 is the least significant index bit, so it is
// the rightmost factor.
MatrixXcd embed(const std::map<Qubit, MatrixXcd>& factors, std::size_t n) {
  MatrixXcd out = MatrixXcd::Identity(1, 1);
  for (std::size_t q = n; q-- > 0;) {
    auto it = factors.find(q);
    out = kron(out, it != factors.end() ? it->second
                                        : MatrixXcd::Identity(2, 2).eval());
  }
  return out;
}

}  // namespace

MatrixXcd dense_gate_matrix(const Gate& gate, std::size_t n_qubits) {
  const MatrixXcd base = to_eigen(base_matrix(gate));
  if (gate.num_controls() == 0) return embed({{gate.target, base}}, n_qubits);

  MatrixXcd one_proj = MatrixXcd::Zero(2, 2);
  one_proj(1, 1) = 1.0;
  std::map<Qubit, MatrixXcd> controls_on;
  for (Qubit c : gate.control_qubits()) controls_on[c] = one_proj;
  std::map<Qubit, MatrixXcd> controlled_base = controls_on;
  controlled_base[gate.target] = base;

  // U = I - P + P (x) M, where P projects every control onto |1>.
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  return MatrixXcd::Identity(dim, dim) - embed(controls_on, n_qubits) +
         embed(controlled_base, n_qubits);
}

MatrixXcd dense_oracle_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  if (n > kDenseOracleMaxQubits) {
    throw ResourceError("dense oracle limited to " +
                        std::to_string(kDenseOracleMaxQubits) + " qubits, got " +
                        std::to_string(n));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  MatrixXcd u = MatrixXcd::Identity(dim, dim);
  for (const auto& g : circuit.gates()) u = dense_gate_matrix(g, n) * u;
  return u;
}

}  // namespace eva
