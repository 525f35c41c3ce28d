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

#include "fpsearch/prior.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fpsearch {

EpsilonPrior::EpsilonPrior(double eps0) : eps0_(eps0) {
  if (!(eps0 > 0.0 && eps0 <= 1.0)) {
    throw std::invalid_argument("EpsilonPrior: eps0 " + std::to_string(eps0) +
                                " outside (0, 1]");
  }
}

double EpsilonPrior::sample(std::mt19937_64& rng) const {
  return eps0_ * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

RealizableGrid make_realizable_grid(std::size_t n_items, const EpsilonPrior& prior) {
  if (n_items == 0) throw std::invalid_argument("make_realizable_grid: N must be >= 1");
  RealizableGrid grid{n_items, {}};
  for (std::size_t unmarked = 0; unmarked <= n_items; ++unmarked) {
    double eps = double(unmarked) / double(n_items);
    if (eps > prior.eps0()) break;
    grid.epsilons.push_back(eps);
  }
  return grid;
}

double integrate_polynomial(const Polynomial& poly, const EpsilonPrior& prior) {
  double total = 0.0;
  for (const Polynomial::Term& t : poly.terms) {
    const double k = static_cast<double>(t.exponent);
    total += t.coeff * std::pow(prior.eps0(), k) / (k + 1.0);
  }
  return total;
}

double integrate_polynomial(const FailureModel& model, const EpsilonPrior& prior) {
  return integrate_polynomial(model.poly, prior);
}

double integrate_simulated(const std::function<double(double)>& failure_at,
                           const EpsilonPrior& prior, std::size_t grid_points) {
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw std::invalid_argument("integrate_simulated: grid_points must be odd and >= 3, got " +
                                std::to_string(grid_points));
  }
  const std::size_t intervals = grid_points - 1;
  const double h = prior.eps0() / double(intervals);
  double sum = 0.0;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double x = i == intervals ? prior.eps0() : h * double(i);
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * failure_at(x);
  }
  // (h/3) * sum is the integral; divide by eps0 for the prior average.
  return sum / (3.0 * double(intervals));
}

std::size_t marked_count_for(std::size_t n_items, double epsilon_target) {
  if (!(epsilon_target >= 0.0 && epsilon_target <= 1.0)) {
    throw std::invalid_argument("make_marked_set: epsilon " + std::to_string(epsilon_target) +
                                " outside [0, 1]");
  }
  auto count = static_cast<std::size_t>(std::floor((1.0 - epsilon_target) * double(n_items) + 0.5));
  return std::min(count, n_items);
}

double realized_epsilon(std::size_t n_items, double epsilon_target) {
  return double(n_items - marked_count_for(n_items, epsilon_target)) / double(n_items);
}

std::pair<MarkedSet, double> make_marked_set(std::size_t n_items, double epsilon_target,
                                             std::uint64_t seed) {
  if (n_items == 0) throw std::invalid_argument("make_marked_set: N must be >= 1");
  const std::size_t count = marked_count_for(n_items, epsilon_target);
  std::vector<std::size_t> pool(n_items);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first `count` slots are a uniform sample.
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n_items - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
  MarkedSet set(n_items, std::move(pool));
  const double eps_eff = set.unmarked_fraction();
  return {std::move(set), eps_eff};
}

double discretized_prior_average(const std::function<double(double)>& failure_at,
                                 std::size_t n_items, const EpsilonPrior& prior) {
  if (n_items == 0) throw std::invalid_argument("discretized_prior_average: N must be >= 1");
  // Half-up rounding maps eps to k unmarked items for eps in
  // [(k - 1/2)/N, (k + 1/2)/N).
  const double n = double(n_items);
  double total = 0.0;
  for (std::size_t k = 0; k <= n_items; ++k) {
    const double lo = std::max(0.0, (double(k) - 0.5) / n);
    const double hi = std::min(prior.eps0(), (double(k) + 0.5) / n);
    if (hi <= lo) {
      if (lo >= prior.eps0()) break;
      continue;
    }
    total += failure_at(double(k) / n) * (hi - lo);
  }
  return total / prior.eps0();
}

std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace fpsearch
