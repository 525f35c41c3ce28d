// Copyright 2026 The fpsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpsearch/operators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "dense_oracle.hpp"
#include "gtest/gtest.h"

namespace fpsearch {
namespace {

double max_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TEST(WalshHadamard, UniformFromZero) {
  const StateVector v = apply_walsh_hadamard(basis_state(8, 0));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(v[i] - 1.0 / std::sqrt(8.0)), 0.0, 1e-15);
}

TEST(WalshHadamard, SingleQubitColumn) {
  const StateVector v = apply_walsh_hadamard(basis_state(2, 1));
  EXPECT_NEAR(v[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v[1].real(), -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(WalshHadamard, Involution) {
  for (std::size_t dim = 2; dim <= 1024; dim *= 2) {
    const StateVector v = random_state(dim, dim);
    EXPECT_LT(max_diff(apply_walsh_hadamard(apply_walsh_hadamard(v)), v), 1e-10) << dim;
  }
}

TEST(WalshHadamard, MatchesDenseMatrix) {
  const std::size_t dim = 32;
  const auto h = testing::hadamard_matrix(dim);
  const StateVector v = random_state(dim, 3);
  const StateVector fast = apply_walsh_hadamard(v);
  for (std::size_t i = 0; i < dim; ++i) {
    Complex expect = 0.0;
    for (std::size_t j = 0; j < dim; ++j) expect += h(i, j) * v[j];
    EXPECT_NEAR(std::abs(fast[i] - expect), 0.0, 1e-12);
  }
}

TEST(WalshHadamard, RejectsNonPowerOfTwo) {
  EXPECT_THROW(apply_walsh_hadamard(StateVector::uniform(6)), std::invalid_argument);
}

TEST(SelectivePhase, Examples) {
  const StateVector v = random_state(8, 1);
  EXPECT_EQ(max_diff(apply_selective_phase(v, MarkedSet(8, {1, 4}), 0.0), v), 0.0);

  const StateVector flipped = apply_selective_phase(StateVector::uniform(4), MarkedSet(4, {0}), std::numbers::pi);
  EXPECT_NEAR(flipped[0].real(), -0.5, 1e-15);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(flipped[i].real(), 0.5, 1e-15);

  const StateVector third = apply_selective_phase(basis_state(2, 0), MarkedSet(2, {0}), kThirdPi);
  EXPECT_NEAR(third[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(third[0].imag(), std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(SelectivePhase, DimensionMismatch) {
  EXPECT_THROW(apply_selective_phase(basis_state(4, 0), MarkedSet::full(8), 1.0), std::invalid_argument);
}

TEST(SelectivePhase, PhasesAdd) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector v = random_state(16, rng());
    const MarkedSet t = MarkedSet::from_predicate(16, [&](std::size_t) { return rng() % 2; });
    const double a = angle(rng), b = angle(rng);
    EXPECT_LT(max_diff(apply_selective_phase(apply_selective_phase(v, t, a), t, b),
                       apply_selective_phase(v, t, a + b)),
              1e-10);
  }
}

TEST(SelectivePhase, MatchesOperatorDefinition) {
  // Column j of the operator is R e_j; compare with I - (1 - e^{i pi/3}) P_T.
  const std::size_t dim = 8;
  const std::vector<std::size_t> targets = {0, 2, 7};
  const auto ref = testing::phase_matrix(dim, targets, kThirdPi);
  const MarkedSet t(dim, targets);
  for (std::size_t j = 0; j < dim; ++j) {
    const StateVector col = apply_selective_phase(basis_state(dim, j), t, kThirdPi);
    for (std::size_t i = 0; i < dim; ++i) EXPECT_NEAR(std::abs(col[i] - ref(i, j)), 0.0, 1e-12);
  }
}

TEST(DenseUnitary, Validation) {
  EXPECT_THROW(DenseUnitary(2, {1.0, 1.0, 0.0, 1.0}), ValidationError);
  EXPECT_THROW(DenseUnitary(2, {1.0, 0.0, 0.0}), std::invalid_argument);
  const StateVector v = random_state(4, 2);
  EXPECT_LT(max_diff(apply_dense(DenseUnitary::identity(4), v), v), 1e-15);
  EXPECT_THROW(apply_dense(DenseUnitary::identity(4), basis_state(2, 0)), std::invalid_argument);
}

TEST(DenseUnitary, AdjointInverts) {
  const DenseUnitary u = haar_random_unitary(8, 42);
  for (std::uint64_t k = 0; k < 20; ++k) {
    const StateVector v = random_state(8, k);
    const StateVector uv = apply_dense(u, v);
    EXPECT_NEAR(uv.norm(), 1.0, 1e-10);
    EXPECT_NEAR(std::abs(inner(v, apply_adjoint(u, uv))), 1.0, 1e-9);
  }
}

TEST(HaarUnitary, ScalarCase) {
  const DenseUnitary u = haar_random_unitary(1, 3);
  EXPECT_NEAR(std::abs(u.at(0, 0)), 1.0, 1e-15);
  EXPECT_THROW(haar_random_unitary(0, 0), std::invalid_argument);
}

TEST(HaarUnitary, Deterministic) {
  const DenseUnitary a = haar_random_unitary(16, 77);
  const DenseUnitary b = haar_random_unitary(16, 77);
  EXPECT_TRUE(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
}

TEST(HaarUnitary, UnitarityAcrossDims) {
  for (std::size_t dim : {2u, 3u, 8u, 64u}) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      EXPECT_LT(haar_random_unitary(dim, s).unitarity_defect(), 1e-9);
    }
  }
}

TEST(HaarUnitary, FirstEntryUniformOnSphere) {
  // |U00|^2 ~ Beta(1, 7): mean 1/8.
  const int samples = 200;
  std::vector<double> x;
  for (int s = 0; s < samples; ++s) x.push_back(std::norm(haar_random_unitary(8, 1000 + s).at(0, 0)));
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= samples;
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= samples - 1;
  EXPECT_NEAR(mean, 1.0 / 8.0, 3.0 * std::sqrt(var / samples));
}

TEST(UnitaryOp, AllVariantsPreserveNorm) {
  const std::size_t dim = 16;
  const MarkedSet t(dim, {1, 2, 9});
  const std::vector<UnitaryOp> ops = {
      WalshHadamard{4},
      SelectivePhase{t, kThirdPi},
      haar_random_unitary(dim, 9),
      Composition{{WalshHadamard{4}, SelectivePhase{t, 1.3}, haar_random_unitary(dim, 10)}},
      adjoint(Composition{{WalshHadamard{4}, SelectivePhase{t, 0.4}}}),
  };
  for (const UnitaryOp& op : ops) {
    EXPECT_EQ(op.dim(), dim);
    for (std::uint64_t k = 0; k < 100; ++k) {
      const StateVector v = random_state(dim, k);
      EXPECT_NEAR(apply(op, v).norm(), 1.0, 1e-10);
      EXPECT_NEAR(apply_adjoint(op, v).norm(), 1.0, 1e-10);
    }
  }
}

TEST(UnitaryOp, CompositionRightmostFirst) {
  // (R W)|0> phases the uniform state; (W R)|0> only phases |0> before W.
  const MarkedSet t(4, {3});
  const UnitaryOp rw = Composition{{SelectivePhase{t, std::numbers::pi}, WalshHadamard{2}}};
  const StateVector out = apply(rw, basis_state(4, 0));
  EXPECT_NEAR(out[3].real(), -0.5, 1e-15);
  EXPECT_NEAR(out[0].real(), 0.5, 1e-15);
}

TEST(UnitaryOp, DoubleAdjointIsIdentityAction) {
  const UnitaryOp u = Composition{{haar_random_unitary(8, 1), SelectivePhase{MarkedSet(8, {0, 5}), 0.7}}};
  const UnitaryOp uu = adjoint(adjoint(u));
  for (std::uint64_t k = 0; k < 20; ++k) {
    const StateVector v = random_state(8, k);
    EXPECT_NEAR(std::abs(inner(apply(u, v), apply(uu, v))), 1.0, 1e-10);
    EXPECT_NEAR(std::abs(inner(v, apply(adjoint(u), apply(u, v)))), 1.0, 1e-10);
  }
}

TEST(UnitaryOp, CompositionRejectsMismatch) {
  EXPECT_THROW(UnitaryOp(Composition{{WalshHadamard{2}, WalshHadamard{3}}}), std::invalid_argument);
  EXPECT_THROW(UnitaryOp(Composition{}), std::invalid_argument);
}

TEST(TransitionProbability, Examples) {
  EXPECT_DOUBLE_EQ(transition_probability(DenseUnitary::identity(4), 0, MarkedSet(4, {0})), 1.0);
  EXPECT_DOUBLE_EQ(transition_probability(DenseUnitary::identity(4), 0, MarkedSet(4, {1})), 0.0);
  EXPECT_NEAR(transition_probability(WalshHadamard{4}, 0, MarkedSet::prefix(16, 12)), 0.75, 1e-15);
  EXPECT_THROW(transition_probability(WalshHadamard{4}, 0, MarkedSet::full(8)), std::invalid_argument);
}

}  // namespace
}  // namespace fpsearch
