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
#include <span>
#include <vector>

#include "fpsearch/statevec.hpp"

namespace fpsearch {

inline constexpr std::size_t kAncillaDim = 6;

/// (1/sqrt 6) sum_b omega^b |b>, omega = e^{-i pi/3}. This is an eigenvector
/// of |b> -> |b+1 mod 6> with eigenvalue e^{+i pi/3}.
StateVector prepare_phase_ancilla();

/// Main register (dim N) tensored with a six-level ancilla. Amplitudes are
/// indexed as x * 6 + b (ancilla fastest).
class CompositeRegister {
 public:
  /// Throws std::invalid_argument if amps.size() is not a positive multiple
  /// of 6, StateError if it is not normalized.
  CompositeRegister(std::size_t main_dim, std::vector<Complex> amps);

  static CompositeRegister product(const StateVector& main, const StateVector& ancilla);

  std::size_t main_dim() const { return main_dim_; }
  std::size_t ancilla_dim() const { return kAncillaDim; }
  std::span<const Complex> amps() const { return amps_; }
  const Complex& at(std::size_t x, std::size_t b) const { return amps_[x * kAncillaDim + b]; }

  /// Tr(rho_anc^2). Equals 1 exactly when the state is a product across the
  /// main|ancilla cut (Schmidt rank 1).
  double ancilla_purity() const;

 private:
  std::size_t main_dim_;
  std::vector<Complex> amps_;
};

enum class ShiftDirection { kIncrement, kDecrement };

/// |x>|b> -> |x>|b + F(x) mod 6>, F(x) = [x in marked]. kDecrement subtracts
/// instead, which kicks back e^{-i pi/3} against the prepared ancilla.
CompositeRegister modular_add_oracle(const CompositeRegister& reg, const MarkedSet& marked,
                                     ShiftDirection direction = ShiftDirection::kIncrement);

/// Runs v (x) ancilla through the oracle and compares with
/// (R(F, pi/3) v) (x) ancilla. Returns |<expected|actual>|.
double kickback_equivalence(const StateVector& v, const MarkedSet& marked);

}  // namespace fpsearch
