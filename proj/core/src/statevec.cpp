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

#include "fpsearch/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace fpsearch {

namespace {

double squared_norm(std::span<const Complex> amps) {
  double total = 0.0;
  for (const Complex& a : amps) total += std::norm(a);
  return total;
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) throw std::invalid_argument("StateVector: dim must be >= 1");
  double n = norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw StateError("StateVector: norm " + std::to_string(n) + " is not 1");
  }
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
  if (amps.empty()) throw std::invalid_argument("StateVector: dim must be >= 1");
  double n = std::sqrt(squared_norm(amps));
  if (n == 0.0) throw std::invalid_argument("StateVector: cannot normalize the zero vector");
  for (Complex& a : amps) a /= n;
  return StateVector(std::move(amps));
}

StateVector StateVector::uniform(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("StateVector: dim must be >= 1");
  return StateVector(std::vector<Complex>(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0)));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

MarkedSet::MarkedSet(std::size_t dim, std::vector<std::size_t> indices)
    : dim_(dim), indices_(std::move(indices)) {
  if (dim_ == 0) throw std::invalid_argument("MarkedSet: dim must be >= 1");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("MarkedSet: duplicate index");
  }
  if (!indices_.empty() && indices_.back() >= dim_) {
    throw std::invalid_argument("MarkedSet: index " + std::to_string(indices_.back()) +
                                " out of range for dim " + std::to_string(dim_));
  }
}

MarkedSet MarkedSet::empty(std::size_t dim) { return MarkedSet(dim, {}); }

MarkedSet MarkedSet::full(std::size_t dim) { return prefix(dim, dim); }

MarkedSet MarkedSet::single(std::size_t dim, std::size_t index) {
  return MarkedSet(dim, {index});
}

MarkedSet MarkedSet::prefix(std::size_t dim, std::size_t count) {
  if (count > dim) throw std::invalid_argument("MarkedSet: prefix longer than dim");
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return MarkedSet(dim, std::move(idx));
}

MarkedSet MarkedSet::from_predicate(std::size_t dim,
                                    const std::function<bool(std::size_t)>& predicate) {
  std::vector<std::size_t> idx;
  for (std::size_t x = 0; x < dim; ++x) {
    if (predicate(x)) idx.push_back(x);
  }
  return MarkedSet(dim, std::move(idx));
}

bool MarkedSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

MarkedSet MarkedSet::complement() const {
  std::vector<std::size_t> out;
  out.reserve(dim_ - indices_.size());
  auto it = indices_.begin();
  for (std::size_t x = 0; x < dim_; ++x) {
    if (it != indices_.end() && *it == x) {
      ++it;
    } else {
      out.push_back(x);
    }
  }
  return MarkedSet(dim_, std::move(out));
}

double MarkedSet::unmarked_fraction() const {
  return double(dim_ - indices_.size()) / double(dim_);
}

StateVector basis_state(std::size_t dim, std::size_t index) {
  if (dim == 0) throw std::invalid_argument("basis_state: dim must be >= 1");
  if (index >= dim) {
    throw std::invalid_argument("basis_state: index " + std::to_string(index) +
                                " out of range for dim " + std::to_string(dim));
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

Complex inner(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  Complex total = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

double subspace_probability(const StateVector& v, const MarkedSet& targets) {
  require_same_dim(v.dim(), targets.dim(), "subspace_probability");
  double total = 0.0;
  for (std::size_t i : targets.indices()) total += std::norm(v[i]);
  return total;
}

std::size_t sample_measurement_from_uniform(const StateVector& v, double u) {
  double n = v.norm();
  if (std::abs(n - 1.0) > 1e-8) {
    throw StateError("sample_measurement: state norm " + std::to_string(n) + " is not 1");
  }
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    double p = std::norm(v[i]);
    if (p == 0.0) continue;
    cumulative += p;
    last_nonzero = i;
    if (u < cumulative) return i;
  }
  // Rounding can leave the cumulative sum a hair below u.
  return last_nonzero;
}

std::size_t sample_measurement(const StateVector& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_measurement_from_uniform(v, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

StateVector random_state(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_state: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(dim);
  for (Complex& a : amps) {
    double re = gauss(rng);
    double im = gauss(rng);
    a = Complex(re, im);
  }
  return StateVector::normalized(std::move(amps));
}

}  // namespace fpsearch
