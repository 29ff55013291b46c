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

#include <Eigen/Dense>

#include "eva/simulator.hpp"

namespace eva {

inline constexpr std::size_t kDenseOracleMaxQubits = 10;

/// Full 2^n x 2^n unitary of a circuit, assembled from Kronecker products of
/// per-qubit 2x2 factors. Independent of the amplitude kernels in `run` and
/// meant for cross-checking them. Throws ResourceError above
/// kDenseOracleMaxQubits.
Eigen::MatrixXcd dense_oracle_unitary(const Circuit& circuit);

/// Embedding of a single gate, as used by dense_oracle_unitary.
Eigen::MatrixXcd dense_gate_matrix(const Gate& gate, std::size_t n_qubits);

}  // namespace eva
