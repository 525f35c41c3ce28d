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

#include "fpsearch/fixedpoint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace fpsearch {

namespace {

double failure_of(const StateVector& v, const MarkedSet& targets) {
  return std::clamp(1.0 - subspace_probability(v, targets), 0.0, 1.0);
}

// Applies U_depth (adjoint = false) or U_depth^dagger (adjoint = true) where
// U_{k+1} = U_k R_s U_k^dagger R_t U_k. Counts R_t applications in `queries`.
StateVector apply_level(const SearchInstance& inst, unsigned depth, bool adjoint, double phase,
                        StateVector v, std::uint64_t& queries) {
  if (depth == 0) {
    return adjoint ? apply_adjoint(inst.unitary(), std::move(v)) : apply(inst.unitary(), std::move(v));
  }
  const unsigned inner = depth - 1;
  if (!adjoint) {
    v = apply_level(inst, inner, false, phase, std::move(v), queries);
    v = apply_selective_phase(std::move(v), inst.targets(), phase);
    ++queries;
    v = apply_level(inst, inner, true, phase, std::move(v), queries);
    v = apply_selective_phase(std::move(v), inst.source(), phase);
    v = apply_level(inst, inner, false, phase, std::move(v), queries);
  } else {
    // (U R_s U^dagger R_t U)^dagger = U^dagger R_t^dagger U R_s^dagger U^dagger
    v = apply_level(inst, inner, true, phase, std::move(v), queries);
    v = apply_selective_phase(std::move(v), inst.source(), -phase);
    v = apply_level(inst, inner, false, phase, std::move(v), queries);
    v = apply_selective_phase(std::move(v), inst.targets(), -phase);
    ++queries;
    v = apply_level(inst, inner, true, phase, std::move(v), queries);
  }
  return v;
}

}  // namespace

SearchInstance::SearchInstance(UnitaryOp u, std::size_t source, MarkedSet targets)
    : u_(std::move(u)), source_(source), targets_(std::move(targets)) {
  if (u_.dim() != targets_.dim()) {
    throw std::invalid_argument("SearchInstance: operator dim " + std::to_string(u_.dim()) +
                                " does not match target dim " + std::to_string(targets_.dim()));
  }
  if (source_ >= u_.dim()) throw std::invalid_argument("SearchInstance: source out of range");
  epsilon_eff_ = std::clamp(1.0 - transition_probability(u_, source_, targets_), 0.0, 1.0);
}

CompositeResult phase_composite(const SearchInstance& inst, double phase) {
  std::uint64_t queries = 0;
  StateVector v = apply_level(inst, 1, false, phase, basis_state(inst.dim(), inst.source()), queries);
  double failure = failure_of(v, inst.targets());
  return CompositeResult{std::move(v), queries, failure};
}

CompositeResult pi3_composite(const SearchInstance& inst) { return phase_composite(inst, kThirdPi); }

CompositeResult database_search(std::size_t n_items, const MarkedSet& targets) {
  if (!std::has_single_bit(n_items)) {
    throw std::invalid_argument("database_search: N = " + std::to_string(n_items) +
                                " is not a power of 2");
  }
  if (targets.dim() != n_items) {
    throw std::invalid_argument("database_search: marked set dim does not match N");
  }
  const auto qubits = static_cast<std::size_t>(std::countr_zero(n_items));
  return pi3_composite(SearchInstance(WalshHadamard{qubits}, 0, targets));
}

std::uint64_t recursion_queries(unsigned depth) {
  if (depth > kMaxRecursionDepth) {
    throw std::invalid_argument("recursion depth " + std::to_string(depth) +
                                " overflows the query counter (max " +
                                std::to_string(kMaxRecursionDepth) + ")");
  }
  std::uint64_t power = 1;
  for (unsigned i = 0; i < depth; ++i) power *= 3;
  return (power - 1) / 2;
}

CompositeResult recursive_composite(const SearchInstance& inst, unsigned depth) {
  const std::uint64_t expected = recursion_queries(depth);
  std::uint64_t queries = 0;
  StateVector v =
      apply_level(inst, depth, false, kThirdPi, basis_state(inst.dim(), inst.source()), queries);
  if (queries != expected) throw std::logic_error("recursive_composite: query count mismatch");
  double failure = failure_of(v, inst.targets());
  return CompositeResult{std::move(v), queries, failure};
}

CompositeResult standard_amplification_iterate(const SearchInstance& inst) {
  return phase_composite(inst, std::numbers::pi);
}

}  // namespace fpsearch
