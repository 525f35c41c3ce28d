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
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "fpsearch/baselines.hpp"
#include "fpsearch/statevec.hpp"

namespace fpsearch {

/// Uniform prior epsilon ~ U(0, eps0). The interval is treated as closed.
class EpsilonPrior {
 public:
  /// Throws std::invalid_argument unless 0 < eps0 <= 1.
  explicit EpsilonPrior(double eps0);

  double eps0() const { return eps0_; }

  /// Inverse-CDF draw: eps0 * u.
  double sample(std::mt19937_64& rng) const;

 private:
  double eps0_;
};

/// Exact fractions 1 - m/N, m = 0..N, that lie in [0, eps0], ascending.
struct RealizableGrid {
  std::size_t n_items;
  std::vector<double> epsilons;
};

RealizableGrid make_realizable_grid(std::size_t n_items, const EpsilonPrior& prior);

/// Prior average of a polynomial model: sum_k c_k eps0^k / (k + 1).
double integrate_polynomial(const Polynomial& poly, const EpsilonPrior& prior);
double integrate_polynomial(const FailureModel& model, const EpsilonPrior& prior);

/// Composite Simpson estimate of (1/eps0) int_0^eps0 f(eps) d eps on
/// `grid_points` equally spaced nodes. Throws std::invalid_argument unless
/// grid_points is odd and >= 3.
double integrate_simulated(const std::function<double(double)>& failure_at,
                           const EpsilonPrior& prior, std::size_t grid_points);

/// Number of marked items for a target unmarked fraction:
/// floor((1 - eps) N + 1/2).
std::size_t marked_count_for(std::size_t n_items, double epsilon_target);

/// The unmarked fraction a database of size N actually realizes for a
/// target epsilon.
double realized_epsilon(std::size_t n_items, double epsilon_target);

/// Random marked set of size marked_count_for(N, eps), chosen uniformly
/// without replacement. Returns the set and its exact eps_eff.
std::pair<MarkedSet, double> make_marked_set(std::size_t n_items, double epsilon_target,
                                             std::uint64_t seed);

/// Exact prior average of f(realized_epsilon(N, eps)) for eps ~ U(0, eps0),
/// i.e. the prediction for an end-to-end run that draws eps and then builds a
/// size-N database.
double discretized_prior_average(const std::function<double(double)>& failure_at,
                                 std::size_t n_items, const EpsilonPrior& prior);

/// Independent generator for task `index` of a run seeded with `seed`.
std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index);

}  // namespace fpsearch
