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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "eva/dense_oracle.hpp"
#include "eva/errors.hpp"
#include "eva/rng.hpp"
#include "eva/simulator.hpp"
#include "oracle.hpp"

namespace eva {
namespace {

using namespace std::complex_literals;
constexpr double kTol = 1e-10;

StateVector plus_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector(1, {s, s});
}

// State with a given P(1) on qubit 0: RX(theta)|0> has P(1) = sin^2(theta/2).
StateVector with_p1(double p1) {
  Circuit c(1);
  c.append(Gate::rx(0, 2.0 * std::asin(std::sqrt(p1))));
  return run(c, StateVector(1));
}

Gate random_gate(CounterRng& rng, std::size_t n) {
  auto pick = [&](std::size_t bound) {
    return static_cast<Qubit>(rng.next_uniform() * static_cast<double>(bound));
  };
  const double theta = rng.next_uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
  const int max_kind = n >= 3 ? 8 : (n >= 2 ? 7 : 3);
  const auto kind = static_cast<GateKind>(pick(static_cast<std::size_t>(max_kind)));
  const Qubit t = pick(n);
  Qubit c1 = pick(n - 1);
  if (c1 >= t) ++c1;
  Qubit c2 = 0;
  if (n >= 3) {
    do c2 = pick(n);
    while (c2 == t || c2 == c1);
  }
  switch (kind) {
    case GateKind::H: return Gate::h(t);
    case GateKind::RX: return Gate::rx(t, theta);
    case GateKind::RZ: return Gate::rz(t, theta);
    case GateKind::CNOT: return Gate::cnot(c1, t);
    case GateKind::CH: return Gate::ch(c1, t);
    case GateKind::CRX: return Gate::crx(c1, t, theta);
    case GateKind::CRZ: return Gate::crz(c1, t, theta);
    case GateKind::Toffoli: return Gate::toffoli(c1, c2, t);
  }
  return Gate::h(t);
}

StateVector random_state(CounterRng& rng, std::size_t n) {
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {rng.next_uniform(-1, 1), rng.next_uniform(-1, 1)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(n, std::move(amps));
}

TEST(GateTest, BaseMatrices) {
  const auto h = base_matrix(Gate::h(0));
  EXPECT_NEAR(std::abs(h[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h[3] + 1.0 / std::sqrt(2.0)), 0.0, 1e-15);

  // RZ(-2 t b) = e^{i t b Z}: phase +tb on |0>, -tb on |1>.
  const auto rz = base_matrix(Gate::rz(0, -1.4));
  EXPECT_NEAR(std::abs(rz[0] - std::polar(1.0, 0.7)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rz[3] - std::polar(1.0, -0.7)), 0.0, 1e-15);

  const auto rx = base_matrix(Gate::rx(0, std::numbers::pi));
  EXPECT_NEAR(std::abs(rx[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rx[2] - (-1.0i)), 0.0, 1e-15);
}

TEST(CircuitTest, AppendValidates) {
  Circuit c(2);
  EXPECT_THROW(c.append(Gate::h(2)), InvalidInput);
  EXPECT_THROW(c.append(Gate::cnot(1, 1)), InvalidInput);
  EXPECT_THROW(c.append(Gate::rz(0, INFINITY)), InvalidInput);
  Circuit three(3);
  EXPECT_THROW(three.append(Gate::toffoli(1, 1, 0)), InvalidInput);
  EXPECT_THROW(c.append(three), ShapeError);
  EXPECT_THROW(Circuit(0), InvalidInput);
}

TEST(StateVectorTest, ConstructionChecks) {
  EXPECT_THROW(StateVector(1, {1.0, 1.0}), InvalidInput);
  EXPECT_THROW(StateVector(2, {1.0, 0.0}), ShapeError);
  const StateVector zero(3);
  EXPECT_EQ(zero.dim(), 8u);
  EXPECT_EQ(zero[0], Complex(1.0));
}

TEST(RunTest, HadamardOnZero) {
  Circuit c(1);
  c.append(Gate::h(0));
  const auto out = run(c, StateVector(1));
  EXPECT_NEAR(std::abs(out[0] - 1.0 / std::sqrt(2.0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(out[1] - 1.0 / std::sqrt(2.0)), 0.0, kTol);
}

TEST(RunTest, RzPhaseOnZero) {
  Circuit c(1);
  c.append(Gate::rz(0, -1.4));
  const auto out = run(c, StateVector(1));
  EXPECT_NEAR(std::abs(out[0] - std::exp(0.7i)), 0.0, kTol);
  EXPECT_NEAR(std::abs(out[1]), 0.0, kTol);
}

TEST(RunTest, BellPair) {
  // (|00> + |10>)/sqrt2 in bit-string order means qubit 0 set: indices 0, 1.
  const double s = 1.0 / std::sqrt(2.0);
  StateVector in(2, {s, s, 0, 0});
  Circuit c(2);
  c.append(Gate::cnot(0, 1));
  const auto out = run(c, in);
  EXPECT_NEAR(std::abs(out[0] - s), 0.0, kTol);
  EXPECT_NEAR(std::abs(out[3] - s), 0.0, kTol);
  EXPECT_NEAR(std::abs(out[1]), 0.0, kTol);
  EXPECT_NEAR(std::abs(out[2]), 0.0, kTol);
}

TEST(RunTest, SizeMismatch) {
  EXPECT_THROW(run(Circuit(2), StateVector(3)), ShapeError);
}

TEST(RunTest, ControlledGatesActOnlyWhenControlsSet) {
  Circuit c(3);
  c.append(Gate::toffoli(0, 1, 2));
  // |011> (qubits 0 and 1 set) -> |111>
  std::vector<Complex> amps(8, 0.0);
  amps[3] = 1.0;
  EXPECT_NEAR(std::abs(run(c, StateVector(3, amps))[7] - 1.0), 0.0, kTol);
  // |001> untouched
  std::fill(amps.begin(), amps.end(), 0.0);
  amps[1] = 1.0;
  EXPECT_NEAR(std::abs(run(c, StateVector(3, amps))[1] - 1.0), 0.0, kTol);
}

TEST(RunTest, MatchesDenseOracleOnRandomCircuits) {
  CounterRng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Circuit c(n);
    const int len = 1 + static_cast<int>(rng.next_uniform() * 25);
    for (int g = 0; g < len; ++g) c.append(random_gate(rng, n));
    const auto in = random_state(rng, n);
    const auto out = run(c, in);
    ASSERT_NEAR(out.norm_squared(), 1.0, kTol) << "trial " << trial;
    const Eigen::VectorXcd want = dense_oracle_unitary(c) * testing::to_eigen(in);
    for (std::size_t i = 0; i < out.dim(); ++i) {
      ASSERT_NEAR(std::abs(out[i] - want(static_cast<Eigen::Index>(i))), 0.0, kTol)
          << "trial " << trial << " amplitude " << i;
    }
  }
}

TEST(DenseOracleTest, EmptyCircuitIsIdentity) {
  const auto u = dense_oracle_unitary(Circuit(2));
  EXPECT_TRUE(u.isApprox(Eigen::MatrixXcd::Identity(4, 4), 1e-15));
}

TEST(DenseOracleTest, SingleHadamard) {
  Circuit c(1);
  c.append(Gate::h(0));
  Eigen::MatrixXcd h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  EXPECT_LT((dense_oracle_unitary(c) - h).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DenseOracleTest, IsUnitary) {
  CounterRng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Circuit c(n);
    for (int g = 0; g < 15; ++g) c.append(random_gate(rng, n));
    const auto u = dense_oracle_unitary(c);
    const auto dim = u.rows();
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff(),
              kTol);
  }
}

TEST(DenseOracleTest, RefusesWideRegisters) {
  EXPECT_THROW(dense_oracle_unitary(Circuit(11)), ResourceError);
}

TEST(AncillaProbabilitiesTest, Examples) {
  const auto a = ancilla_probabilities(StateVector(1), 0);
  EXPECT_DOUBLE_EQ(a.p0, 1.0);
  EXPECT_DOUBLE_EQ(a.p1, 0.0);
  const auto b = ancilla_probabilities(plus_state(), 0);
  EXPECT_NEAR(b.p0, 0.5, 1e-15);
  EXPECT_NEAR(b.p1, 0.5, 1e-15);
  EXPECT_THROW(ancilla_probabilities(StateVector(2), 2), InvalidInput);
}

TEST(SampleQubitTest, DegenerateProbabilities) {
  EXPECT_EQ(sample_qubit(StateVector(1), 0, 100, 1), (MeasurementCounts{100, 0}));
  Circuit flip(1);
  flip.append(Gate::rx(0, std::numbers::pi));
  EXPECT_EQ(sample_qubit(run(flip, StateVector(1)), 0, 7, 1), (MeasurementCounts{0, 7}));
}

TEST(SampleQubitTest, FairCoinMillionShots) {
  const auto c = sample_qubit(plus_state(), 0, 1'000'000, 12345);
  EXPECT_EQ(c.total(), 1'000'000u);
  EXPECT_NEAR(static_cast<double>(c.ones) / 1e6, 0.5, 0.002);
}

TEST(SampleQubitTest, DeterministicPerSeed) {
  const auto s = with_p1(0.3);
  EXPECT_EQ(sample_qubit(s, 0, 5000, 9), sample_qubit(s, 0, 5000, 9));
  EXPECT_NE(sample_qubit(s, 0, 5000, 9), sample_qubit(s, 0, 5000, 10));
}

TEST(SampleQubitTest, ConvergesWithinFiveSigma) {
  const double p1 = 0.3;
  const auto s = with_p1(p1);
  const std::uint64_t shots = 2000;
  const double sigma = std::sqrt(p1 * (1 - p1) / shots);
  int within = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto c = sample_qubit(s, 0, shots, seed);
    within += std::abs(static_cast<double>(c.ones) / shots - p1) < 5 * sigma;
  }
  EXPECT_GE(within, 999);
}

TEST(SampleQubitTest, ZeroShotsRejected) {
  EXPECT_THROW(sample_qubit(StateVector(1), 0, 0, 0), InvalidInput);
}

TEST(SampleBitstringsTest, FrequenciesMatchProbabilities) {
  CounterRng rng(5);
  const auto s = random_state(rng, 3);
  const auto probs = s.probabilities();
  const std::uint64_t shots = 200'000;
  std::vector<double> freq(8, 0.0);
  for (auto x : sample_bitstrings(s, shots, 77)) freq[x] += 1.0 / shots;
  for (std::size_t i = 0; i < 8; ++i) {
    const double se = std::sqrt(probs[i] * (1 - probs[i]) / shots);
    EXPECT_NEAR(freq[i], probs[i], 5 * se + 1e-12) << "index " << i;
  }
}

TEST(SampleBitstringsTest, NeverReturnsZeroProbabilityOutcomes) {
  const double s = 1.0 / std::sqrt(2.0);
  const StateVector bell(2, {s, 0, 0, s});
  for (auto x : sample_bitstrings(bell, 10'000, 3)) EXPECT_TRUE(x == 0 || x == 3);
}

TEST(P0MinusP1Test, Examples) {
  EXPECT_DOUBLE_EQ(p0_minus_p1({600, 400}), 0.2);
  EXPECT_DOUBLE_EQ(p0_minus_p1({500, 500}), 0.0);
  EXPECT_DOUBLE_EQ(p0_minus_p1({1000, 0}), 1.0);
  EXPECT_THROW(p0_minus_p1({0, 0}), InvalidInput);
}

}  // namespace
}  // namespace eva
