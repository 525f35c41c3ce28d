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

#include "fpsearch/ancilla.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fpsearch/operators.hpp"

namespace fpsearch {

StateVector prepare_phase_ancilla() {
  std::vector<Complex> amps(kAncillaDim);
  const double scale = 1.0 / std::sqrt(double(kAncillaDim));
  for (std::size_t b = 0; b < kAncillaDim; ++b) {
    amps[b] = std::polar(scale, -std::numbers::pi * double(b) / 3.0);
  }
  return StateVector(std::move(amps));
}

CompositeRegister::CompositeRegister(std::size_t main_dim, std::vector<Complex> amps)
    : main_dim_(main_dim), amps_(std::move(amps)) {
  if (main_dim_ == 0 || amps_.size() != main_dim_ * kAncillaDim) {
    throw std::invalid_argument("CompositeRegister: expected " +
                                std::to_string(main_dim_ * kAncillaDim) + " amplitudes");
  }
  double total = 0.0;
  for (const Complex& a : amps_) total += std::norm(a);
  if (std::abs(std::sqrt(total) - 1.0) > kNormTolerance) {
    throw StateError("CompositeRegister: state is not normalized");
  }
}

CompositeRegister CompositeRegister::product(const StateVector& main, const StateVector& ancilla) {
  if (ancilla.dim() != kAncillaDim) {
    throw std::invalid_argument("CompositeRegister: ancilla must have dim 6");
  }
  std::vector<Complex> amps(main.dim() * kAncillaDim);
  for (std::size_t x = 0; x < main.dim(); ++x) {
    for (std::size_t b = 0; b < kAncillaDim; ++b) amps[x * kAncillaDim + b] = main[x] * ancilla[b];
  }
  return CompositeRegister(main.dim(), std::move(amps));
}

double CompositeRegister::ancilla_purity() const {
  // rho_anc[b][c] = sum_x a(x,b) conj(a(x,c))
  Complex rho[kAncillaDim][kAncillaDim] = {};
  for (std::size_t x = 0; x < main_dim_; ++x) {
    for (std::size_t b = 0; b < kAncillaDim; ++b) {
      for (std::size_t c = 0; c < kAncillaDim; ++c) rho[b][c] += at(x, b) * std::conj(at(x, c));
    }
  }
  double purity = 0.0;
  for (auto& row : rho) {
    for (const Complex& z : row) purity += std::norm(z);
  }
  return purity;
}

CompositeRegister modular_add_oracle(const CompositeRegister& reg, const MarkedSet& marked,
                                     ShiftDirection direction) {
  if (marked.dim() != reg.main_dim()) {
    throw std::invalid_argument("modular_add_oracle: marked set dim " +
                                std::to_string(marked.dim()) + " does not match register dim " +
                                std::to_string(reg.main_dim()));
  }
  const std::size_t shift = direction == ShiftDirection::kIncrement ? 1 : kAncillaDim - 1;
  std::vector<Complex> out(reg.amps().begin(), reg.amps().end());
  for (std::size_t x : marked.indices()) {
    for (std::size_t b = 0; b < kAncillaDim; ++b) {
      out[x * kAncillaDim + (b + shift) % kAncillaDim] = reg.at(x, b);
    }
  }
  return CompositeRegister(reg.main_dim(), std::move(out));
}

double kickback_equivalence(const StateVector& v, const MarkedSet& marked) {
  if (v.dim() != marked.dim()) {
    throw std::invalid_argument("kickback_equivalence: dimension mismatch");
  }
  const StateVector ancilla = prepare_phase_ancilla();
  const CompositeRegister actual =
      modular_add_oracle(CompositeRegister::product(v, ancilla), marked);
  const CompositeRegister expected =
      CompositeRegister::product(apply_selective_phase(v, marked, kThirdPi), ancilla);
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < actual.amps().size(); ++i) {
    overlap += std::conj(expected.amps()[i]) * actual.amps()[i];
  }
  return std::abs(overlap);
}

}  // namespace fpsearch
