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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <variant>
#include <vector>

#include "fpsearch/statevec.hpp"

namespace fpsearch {

/// The fixed-point phase angle, pi/3.
inline constexpr double kThirdPi = std::numbers::pi / 3.0;

/// In-place fast Walsh-Hadamard transform, H^{(x)n} v. Throws
/// std::invalid_argument unless v.dim() is a power of two.
StateVector apply_walsh_hadamard(StateVector v);

/// amps[i] <- e^{i phase} amps[i] for every i in `targets`.
StateVector apply_selective_phase(StateVector v, const MarkedSet& targets, double phase);

/// Selective phase on a single basis state.
StateVector apply_selective_phase(StateVector v, std::size_t index, double phase);

/// Dense dim x dim unitary, row-major. Unitarity (max |U^dagger U - I| <= 1e-9)
/// is checked once at construction.
class DenseUnitary {
 public:
  /// Throws std::invalid_argument if `matrix` is not dim*dim long and
  /// ValidationError if it is not unitary.
  DenseUnitary(std::size_t dim, std::vector<Complex> matrix);

  static DenseUnitary identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Complex& at(std::size_t row, std::size_t col) const { return matrix_[row * dim_ + col]; }
  std::span<const Complex> data() const { return matrix_; }

  /// max_{ij} |(U^dagger U - I)_{ij}|
  double unitarity_defect() const;

 private:
  std::size_t dim_;
  std::vector<Complex> matrix_;
};

StateVector apply_dense(const DenseUnitary& u, const StateVector& v);
StateVector apply_adjoint(const DenseUnitary& u, const StateVector& v);

/// Haar-distributed unitary: complex Gaussian matrix, modified Gram-Schmidt on
/// the columns. The Gram-Schmidt triangular factor has a real positive
/// diagonal, which is the phase convention that makes the result Haar.
DenseUnitary haar_random_unitary(std::size_t dim, std::uint64_t seed);

class UnitaryOp;

struct WalshHadamard {
  std::size_t qubits;
};

struct SelectivePhase {
  MarkedSet targets;
  double phase;
};

/// Product of operators in written order: the last factor acts first.
struct Composition {
  std::vector<UnitaryOp> factors;
};

struct Adjoint {
  std::shared_ptr<const UnitaryOp> inner;
};

/// Any norm-preserving operator used by the search routines.
class UnitaryOp {
 public:
  using Variant = std::variant<WalshHadamard, SelectivePhase, DenseUnitary, Composition, Adjoint>;

  UnitaryOp(WalshHadamard w) : op_(w) {}
  UnitaryOp(SelectivePhase p) : op_(std::move(p)) {}
  UnitaryOp(DenseUnitary u) : op_(std::move(u)) {}
  /// Throws std::invalid_argument on an empty or dimension-inconsistent list.
  UnitaryOp(Composition c);
  UnitaryOp(Adjoint a);

  const Variant& variant() const { return op_; }
  std::size_t dim() const;

 private:
  Variant op_;
};

UnitaryOp adjoint(const UnitaryOp& op);

StateVector apply(const UnitaryOp& op, StateVector v);
StateVector apply_adjoint(const UnitaryOp& op, StateVector v);

/// ||P_T U |source>||^2, the 1 - epsilon of a search instance.
double transition_probability(const UnitaryOp& u, std::size_t source, const MarkedSet& targets);

}  // namespace fpsearch
