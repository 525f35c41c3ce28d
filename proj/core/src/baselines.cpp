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

#include "fpsearch/baselines.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "fpsearch/fixedpoint.hpp"

namespace fpsearch {

namespace {

void require_unit_interval(double epsilon, const char* what) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": epsilon " + std::to_string(epsilon) +
                                " outside [0, 1]");
  }
}

}  // namespace

double Polynomial::operator()(double x) const {
  double total = 0.0;
  for (const Term& t : terms) {
    total += t.coeff * std::pow(x, static_cast<double>(t.exponent));
  }
  return total;
}

double classical_failure(double epsilon, std::uint64_t queries) {
  require_unit_interval(epsilon, "classical_failure");
  return std::pow(epsilon, static_cast<double>(queries + 1));
}

double classical_monte_carlo(std::size_t n_items, const MarkedSet& marked, std::uint64_t queries,
                             std::uint64_t trials, std::uint64_t seed) {
  if (n_items == 0) throw std::invalid_argument("classical_monte_carlo: empty database");
  if (marked.dim() != n_items) {
    throw std::invalid_argument("classical_monte_carlo: marked set dim does not match N");
  }
  if (trials == 0) throw std::invalid_argument("classical_monte_carlo: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n_items - 1);
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool found = false;
    for (std::uint64_t q = 0; q < queries && !found; ++q) found = marked.contains(pick(rng));
    if (!found) found = marked.contains(pick(rng));
    if (!found) ++failures;
  }
  return double(failures) / double(trials);
}

double mosca_failure(double epsilon) {
  require_unit_interval(epsilon, "mosca_failure");
  return 0.75 * epsilon * epsilon + 0.25 * epsilon * epsilon * epsilon;
}

bool younes_limit_case(double epsilon) { return epsilon >= 1.0; }

double younes_success(double epsilon, std::uint64_t queries) {
  require_unit_interval(epsilon, "younes_success");
  if (younes_limit_case(epsilon)) {
    // sin^2(k t)/sin^2 t -> k^2 as t -> 0, and (1 - cos t) -> 0.
    return 0.0;
  }
  const double theta = std::acos(epsilon);
  const double q = static_cast<double>(queries);
  const double s = std::sin(theta);
  const double a = std::sin((q + 1.0) * theta) / s;
  const double b = std::sin(q * theta) / s;
  return (1.0 - epsilon) * (a * a + b * b);
}

double younes_failure(double epsilon, std::uint64_t queries) {
  return 1.0 - younes_success(epsilon, queries);
}

double pi3_failure_closed_form(double epsilon, unsigned depth) {
  require_unit_interval(epsilon, "pi3_failure_closed_form");
  return std::pow(epsilon, std::pow(3.0, static_cast<double>(depth)));
}

FailureModel classical_model(std::uint64_t queries) {
  return {"classical", Polynomial{{{queries + 1, 1.0}}}, queries};
}

FailureModel mosca_model() { return {"mosca", Polynomial{{{2, 0.75}, {3, 0.25}}}, 1}; }

FailureModel younes_model() {
  return {"younes", Polynomial{{{1, 1.0}, {2, -4.0}, {3, 4.0}}}, 1};
}

FailureModel pi3_model(unsigned depth) {
  const std::uint64_t q = recursion_queries(depth);
  return {"pi3", Polynomial{{{2 * q + 1, 1.0}}}, q};
}

}  // namespace fpsearch
