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

#include "fpsearch/operators.hpp"
#include "fpsearch/statevec.hpp"

namespace fpsearch {

/// A search problem: drive |source> into span(targets) with U.
///
/// `epsilon_eff()` is always recomputed from (U, source, targets) as
/// 1 - ||P_T U |source>||^2.
class SearchInstance {
 public:
  SearchInstance(UnitaryOp u, std::size_t source, MarkedSet targets);

  const UnitaryOp& unitary() const { return u_; }
  std::size_t source() const { return source_; }
  const MarkedSet& targets() const { return targets_; }
  std::size_t dim() const { return targets_.dim(); }
  double epsilon_eff() const { return epsilon_eff_; }

 private:
  UnitaryOp u_;
  std::size_t source_;
  MarkedSet targets_;
  double epsilon_eff_;
};

struct CompositeResult {
  StateVector final_state;
  /// Number of applications of the target-selective phase R_t.
  std::uint64_t oracle_queries;
  /// 1 - ||P_T final_state||^2
  double failure_probability;
};

/// U R_s(phase) U^dagger R_t(phase) U |s>, rightmost first. With
/// phase = pi/3 the failure probability is epsilon_eff^3; with phase = pi this
/// is one amplitude-amplification iterate.
CompositeResult phase_composite(const SearchInstance& inst, double phase);

/// The pi/3 composite. failure = epsilon_eff^3.
CompositeResult pi3_composite(const SearchInstance& inst);

/// W R_0 W R_t W |0...0> on an n-qubit register with N = 2^n. Throws
/// std::invalid_argument unless N is a power of two matching targets.dim().
CompositeResult database_search(std::size_t n_items, const MarkedSet& targets);

/// Largest depth for which (3^depth - 1)/2 fits the query counter.
inline constexpr unsigned kMaxRecursionDepth = 40;

/// Oracle queries used by `recursive_composite` at `depth`: (3^depth - 1)/2.
std::uint64_t recursion_queries(unsigned depth);

/// Nested composite U_{k+1} = U_k R_s U_k^dagger R_t U_k with U_0 = U, all
/// phases pi/3, applied to |s>. failure = epsilon_eff^(3^depth). Throws
/// std::invalid_argument if depth > kMaxRecursionDepth.
CompositeResult recursive_composite(const SearchInstance& inst, unsigned depth);

/// The composite with both phases pi; success = sin^2(3 theta) where
/// sin^2 theta = 1 - epsilon_eff.
CompositeResult standard_amplification_iterate(const SearchInstance& inst);

}  // namespace fpsearch
