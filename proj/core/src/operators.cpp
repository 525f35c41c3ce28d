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

#include "fpsearch/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

namespace fpsearch {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(expected) + " vs " + std::to_string(actual) + ")");
  }
}

}  // namespace

StateVector apply_walsh_hadamard(StateVector v) {
  const std::size_t n = v.dim();
  if (!std::has_single_bit(n)) {
    throw std::invalid_argument("apply_walsh_hadamard: dim " + std::to_string(n) +
                                " is not a power of 2");
  }
  auto a = v.mutable_amps();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        Complex x = a[i];
        Complex y = a[i + half];
        a[i] = x + y;
        a[i + half] = x - y;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(double(n));
  for (Complex& x : a) x *= scale;
  return v;
}

StateVector apply_selective_phase(StateVector v, const MarkedSet& targets, double phase) {
  require_dim(v.dim(), targets.dim(), "apply_selective_phase");
  const Complex factor = std::polar(1.0, phase);
  auto a = v.mutable_amps();
  for (std::size_t i : targets.indices()) a[i] *= factor;
  return v;
}

StateVector apply_selective_phase(StateVector v, std::size_t index, double phase) {
  if (index >= v.dim()) throw std::invalid_argument("apply_selective_phase: index out of range");
  v.mutable_amps()[index] *= std::polar(1.0, phase);
  return v;
}

DenseUnitary::DenseUnitary(std::size_t dim, std::vector<Complex> matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ == 0) throw std::invalid_argument("DenseUnitary: dim must be >= 1");
  if (matrix_.size() != dim_ * dim_) {
    throw std::invalid_argument("DenseUnitary: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(matrix_.size()));
  }
  double defect = unitarity_defect();
  if (!(defect <= 1e-9)) {
    throw ValidationError("DenseUnitary: not unitary (max |U^dagger U - I| = " +
                          std::to_string(defect) + ")");
  }
}

DenseUnitary DenseUnitary::identity(std::size_t dim) {
  std::vector<Complex> m(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return DenseUnitary(dim, std::move(m));
}

double DenseUnitary::unitarity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) sum += std::conj(at(k, i)) * at(k, j);
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

StateVector apply_dense(const DenseUnitary& u, const StateVector& v) {
  require_dim(u.dim(), v.dim(), "apply_dense");
  const std::size_t n = u.dim();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += u.at(i, k) * v[k];
    out[i] = sum;
  }
  return StateVector::normalized(std::move(out));
}

StateVector apply_adjoint(const DenseUnitary& u, const StateVector& v) {
  require_dim(u.dim(), v.dim(), "apply_adjoint");
  const std::size_t n = u.dim();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vk = v[k];
    for (std::size_t i = 0; i < n; ++i) out[i] += std::conj(u.at(k, i)) * vk;
  }
  return StateVector::normalized(std::move(out));
}

DenseUnitary haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("haar_random_unitary: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));

  // Column-major scratch so each column is contiguous.
  std::vector<Complex> cols(dim * dim);
  for (Complex& z : cols) {
    double re = gauss(rng);
    double im = gauss(rng);
    z = Complex(re, im);
  }

  for (std::size_t j = 0; j < dim; ++j) {
    Complex* cj = &cols[j * dim];
    // Two passes of projection keep orthogonality at machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const Complex* ck = &cols[k * dim];
        Complex proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(ck[i]) * cj[i];
        for (std::size_t i = 0; i < dim; ++i) cj[i] -= proj * ck[i];
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(cj[i]);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < dim; ++i) cj[i] /= nrm;
  }

  std::vector<Complex> rows(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) rows[i * dim + j] = cols[j * dim + i];
  }
  return DenseUnitary(dim, std::move(rows));
}

UnitaryOp::UnitaryOp(Composition c) {
  if (c.factors.empty()) throw std::invalid_argument("Composition: no factors");
  const std::size_t d = c.factors.front().dim();
  for (const UnitaryOp& f : c.factors) require_dim(d, f.dim(), "Composition");
  op_ = std::move(c);
}

UnitaryOp::UnitaryOp(Adjoint a) {
  if (!a.inner) throw std::invalid_argument("Adjoint: null operator");
  op_ = std::move(a);
}

std::size_t UnitaryOp::dim() const {
  return std::visit(Overloaded{
                        [](const WalshHadamard& w) { return std::size_t{1} << w.qubits; },
                        [](const SelectivePhase& p) { return p.targets.dim(); },
                        [](const DenseUnitary& u) { return u.dim(); },
                        [](const Composition& c) { return c.factors.front().dim(); },
                        [](const Adjoint& a) { return a.inner->dim(); },
                    },
                    op_);
}

UnitaryOp adjoint(const UnitaryOp& op) {
  if (const auto* a = std::get_if<Adjoint>(&op.variant())) return *a->inner;
  return UnitaryOp(Adjoint{std::make_shared<const UnitaryOp>(op)});
}

StateVector apply(const UnitaryOp& op, StateVector v) {
  require_dim(op.dim(), v.dim(), "apply");
  return std::visit(
      Overloaded{
          [&](const WalshHadamard&) { return apply_walsh_hadamard(std::move(v)); },
          [&](const SelectivePhase& p) {
            return apply_selective_phase(std::move(v), p.targets, p.phase);
          },
          [&](const DenseUnitary& u) { return apply_dense(u, v); },
          [&](const Composition& c) {
            for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it) {
              v = apply(*it, std::move(v));
            }
            return std::move(v);
          },
          [&](const Adjoint& a) { return apply_adjoint(*a.inner, std::move(v)); },
      },
      op.variant());
}

StateVector apply_adjoint(const UnitaryOp& op, StateVector v) {
  require_dim(op.dim(), v.dim(), "apply_adjoint");
  return std::visit(
      Overloaded{
          [&](const WalshHadamard&) { return apply_walsh_hadamard(std::move(v)); },
          [&](const SelectivePhase& p) {
            return apply_selective_phase(std::move(v), p.targets, -p.phase);
          },
          [&](const DenseUnitary& u) { return apply_adjoint(u, v); },
          [&](const Composition& c) {
            // (A B C)^dagger = C^dagger B^dagger A^dagger: A^dagger acts last.
            for (const UnitaryOp& f : c.factors) v = apply_adjoint(f, std::move(v));
            return std::move(v);
          },
          [&](const Adjoint& a) { return apply(*a.inner, std::move(v)); },
      },
      op.variant());
}

double transition_probability(const UnitaryOp& u, std::size_t source, const MarkedSet& targets) {
  require_dim(u.dim(), targets.dim(), "transition_probability");
  return subspace_probability(apply(u, basis_state(u.dim(), source)), targets);
}

}  // namespace fpsearch
