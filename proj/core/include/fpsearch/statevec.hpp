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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fpsearch {

using Complex = std::complex<double>;

/// Tolerance for norm and unitarity checks.
inline constexpr double kNormTolerance = 1e-10;
/// Tolerance for comparing probabilities.
inline constexpr double kProbabilityTolerance = 1e-9;

/// Raised when a state violates a physical precondition (e.g. it is not
/// normalized when a measurement is requested).
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a constructed object fails its validation check.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense complex amplitude vector over a finite basis.
///
/// Constructors check that the vector has unit norm (within kNormTolerance).
/// Operators mutate through `mutable_amps()`; they are responsible for
/// preserving the norm.
class StateVector {
 public:
  /// Takes ownership of `amps`. Throws StateError unless the norm is 1 within
  /// kNormTolerance, std::invalid_argument if `amps` is empty.
  explicit StateVector(std::vector<Complex> amps);

  /// Rescales `amps` to unit norm. Throws std::invalid_argument on a zero or
  /// empty vector.
  static StateVector normalized(std::vector<Complex> amps);

  /// Uniform superposition over `dim` basis states.
  static StateVector uniform(std::size_t dim);

  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amps() const { return amps_; }
  std::span<Complex> mutable_amps() { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

 private:
  std::vector<Complex> amps_;
};

/// Sorted set of distinct basis indices in [0, dim).
class MarkedSet {
 public:
  /// Sorts and validates `indices`. Throws std::invalid_argument on
  /// duplicates, out-of-range entries or dim == 0.
  MarkedSet(std::size_t dim, std::vector<std::size_t> indices);

  static MarkedSet empty(std::size_t dim);
  static MarkedSet full(std::size_t dim);
  static MarkedSet single(std::size_t dim, std::size_t index);
  /// The first `count` indices, {0, ..., count-1}.
  static MarkedSet prefix(std::size_t dim, std::size_t count);
  /// Materializes {x in [0, dim) : predicate(x)}.
  static MarkedSet from_predicate(std::size_t dim,
                                  const std::function<bool(std::size_t)>& predicate);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return indices_.size(); }
  std::span<const std::size_t> indices() const { return indices_; }
  bool contains(std::size_t index) const;

  MarkedSet complement() const;

  /// 1 - |indices| / dim.
  double unmarked_fraction() const;

  friend bool operator==(const MarkedSet&, const MarkedSet&) = default;

 private:
  std::size_t dim_;
  std::vector<std::size_t> indices_;
};

/// |index> in a `dim`-dimensional space.
StateVector basis_state(std::size_t dim, std::size_t index);

/// <a|b>, conjugate-linear in `a`.
Complex inner(const StateVector& a, const StateVector& b);

/// Sum of |amps[i]|^2 over i in `targets`.
double subspace_probability(const StateVector& v, const MarkedSet& targets);

/// Draws one basis index with probability |amps[i]|^2. Deterministic for a
/// given seed. Throws StateError if the norm deviates from 1 by more than 1e-8.
std::size_t sample_measurement(const StateVector& v, std::uint64_t seed);

/// Same, drawing from an existing uniform variate u in [0, 1).
std::size_t sample_measurement_from_uniform(const StateVector& v, double u);

/// Haar-random unit vector (normalized complex Gaussian), deterministic in
/// `seed`.
StateVector random_state(std::size_t dim, std::uint64_t seed);

}  // namespace fpsearch
