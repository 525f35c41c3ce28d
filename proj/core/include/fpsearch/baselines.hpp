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
#include <string>
#include <vector>

#include "fpsearch/statevec.hpp"

namespace fpsearch {

/// Sparse real polynomial sum_k coeff_k x^k.
struct Polynomial {
  struct Term {
    std::uint64_t exponent;
    double coeff;
  };
  std::vector<Term> terms;

  double operator()(double x) const;
};

/// Failure probability p(epsilon) of one algorithm as a polynomial in the
/// unmarked fraction.
struct FailureModel {
  std::string name;
  Polynomial poly;
  std::uint64_t queries;

  double failure(double epsilon) const { return poly(epsilon); }
};

/// epsilon^(q+1): q queried uniform picks and one final unqueried pick all
/// miss. q = 0 is the bare guess. Throws std::invalid_argument for epsilon
/// outside [0, 1].
double classical_failure(double epsilon, std::uint64_t queries);

/// Empirical failure rate of the pick strategy on an explicit database.
/// Picks are uniform with replacement. Throws std::invalid_argument for an
/// empty database or zero trials.
double classical_monte_carlo(std::size_t n_items, const MarkedSet& marked, std::uint64_t queries,
                             std::uint64_t trials, std::uint64_t seed);

/// (3/4) epsilon^2 + (1/4) epsilon^3.
double mosca_failure(double epsilon);

/// Younes et al. success probability
///   (1 - cos t) (sin^2((q+1) t) + sin^2(q t)) / sin^2 t,  t = arccos(epsilon).
/// At epsilon = 1 (t = 0) the ratio is replaced by its limit, giving 0.
double younes_success(double epsilon, std::uint64_t queries);
double younes_failure(double epsilon, std::uint64_t queries);
/// True when younes_success(epsilon, q) is evaluated through the t -> 0 limit.
bool younes_limit_case(double epsilon);

/// epsilon^(3^depth)
double pi3_failure_closed_form(double epsilon, unsigned depth);

FailureModel classical_model(std::uint64_t queries);
FailureModel mosca_model();
/// The q = 1 specialization epsilon - 4 epsilon^2 + 4 epsilon^3.
FailureModel younes_model();
FailureModel pi3_model(unsigned depth);

}  // namespace fpsearch
