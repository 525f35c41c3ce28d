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

#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "experiments.hpp"
#include "fpsearch/ancilla.hpp"
#include "fpsearch/baselines.hpp"
#include "fpsearch/fixedpoint.hpp"
#include "fpsearch/operators.hpp"
#include "fpsearch/prior.hpp"

namespace fpsearch::tools {

namespace {

MarkedSet random_nonempty_subset(std::size_t dim, std::mt19937_64& rng) {
  std::vector<std::size_t> pool(dim);
  for (std::size_t i = 0; i < dim; ++i) pool[i] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, dim)(rng);
  pool.resize(k);
  return MarkedSet(dim, std::move(pool));
}

MarkedSet random_subset(std::size_t dim, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  return MarkedSet::from_predicate(dim, [&](std::size_t) { return coin(rng); });
}

// Two-level rotation with |<0|U|0>|^2 = 1 - eps exactly up to rounding.
UnitaryOp rotation(double eps) {
  const double c = std::sqrt(1.0 - eps);
  const double s = std::sqrt(eps);
  return DenseUnitary(2, {c, -s, s, c});
}

std::vector<double> unit_grid(std::size_t points) {
  std::vector<double> g;
  for (std::size_t i = 0; i < points; ++i) g.push_back(double(i) / double(points - 1));
  return g;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

CheckResult check(std::string name, double worst, double tol) {
  return {std::move(name), worst < tol, "max deviation " + fmt(worst) + " (tol " + fmt(tol) + ")"};
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const Complex w = std::polar(1.0, kThirdPi);

  out.push_back(check("cancellation |1 - e^{i pi/3} + e^{2i pi/3}| = 0",
                      std::abs(1.0 - w + w * w), 1e-12));

  {
    // Database search on every realizable fraction at N.
    const std::size_t n = opts.n;
    const std::size_t stride = std::max<std::size_t>(1, n / 256);
    double worst = 0.0;
    double worst_monotone = 0.0;
    for (std::size_t marked = 0;; marked = std::min(n, marked + stride)) {
      const MarkedSet t = MarkedSet::prefix(n, marked);
      const double eps = t.unmarked_fraction();
      const double f = database_search(n, t).failure_probability;
      worst = std::max(worst, std::abs(f - eps * eps * eps));
      worst_monotone = std::max(worst_monotone, f - eps);
      if (marked == n) break;
    }
    out.push_back(check("database search failure = eps^3 at N=" + std::to_string(n), worst, 1e-9));
    out.push_back({"monotone improvement at N=" + std::to_string(n), worst_monotone <= 1e-9,
                   "max (failure - eps) " + fmt(worst_monotone)});
  }

  {
    double worst_state = 0.0;
    std::uint64_t stream = 0;
    for (std::size_t dim : opts.dims) {
      double worst_dim = 0.0;
      for (std::size_t trial = 0; trial < opts.trials; ++trial) {
        std::mt19937_64 rng = derive_stream(opts.seed, stream++);
        const DenseUnitary u = haar_random_unitary(dim, rng());
        const std::size_t s = std::uniform_int_distribution<std::size_t>(0, dim - 1)(rng);
        SearchInstance inst(u, s, random_nonempty_subset(dim, rng));
        const CompositeResult r = pi3_composite(inst);
        const double eps = inst.epsilon_eff();
        worst_dim = std::max(worst_dim, std::abs(r.failure_probability - eps * eps * eps));

        // Closed-form final state: U|s> (w + p (w-1)^2) + (w-1) P_T U|s>.
        const StateVector us = apply_dense(u, basis_state(dim, s));
        const double p = 1.0 - eps;
        const Complex a = w + p * (w - 1.0) * (w - 1.0);
        for (std::size_t i = 0; i < dim; ++i) {
          Complex expect = us[i] * a;
          if (inst.targets().contains(i)) expect += (w - 1.0) * us[i];
          worst_state = std::max(worst_state, std::abs(expect - r.final_state[i]));
        }
      }
      out.push_back(check("Haar error cubing dim=" + std::to_string(dim) + " trials=" +
                              std::to_string(opts.trials),
                          worst_dim, 1e-9));
    }
    out.push_back(check("final state matches closed-form superposition", worst_state, 1e-10));
  }

  {
    double worst = 0.0;
    std::uint64_t worst_q = 0;
    for (double eps : {0.1, 0.25, 0.5, 0.9}) {
      SearchInstance inst(rotation(eps), 0, MarkedSet::single(2, 0));
      for (unsigned m = 0; m <= 3; ++m) {
        const CompositeResult r = recursive_composite(inst, m);
        worst = std::max(worst, std::abs(r.failure_probability -
                                         pi3_failure_closed_form(inst.epsilon_eff(), m)));
        const std::uint64_t expected_q = (static_cast<std::uint64_t>(std::pow(3, m)) - 1) / 2;
        if (r.oracle_queries != expected_q) ++worst_q;
      }
    }
    out.push_back({"recursion failure = eps^(3^m), queries = (3^m-1)/2",
                   worst < 1e-9 && worst_q == 0,
                   "max deviation " + fmt(worst) + ", query mismatches " + std::to_string(worst_q)});
  }

  {
    double worst_contrast = 0.0;
    double worst_monotone = -1.0;
    for (double eps : unit_grid(101)) {
      SearchInstance inst(rotation(eps), 0, MarkedSet::single(2, 0));
      const double e = inst.epsilon_eff();
      const double success = 1.0 - standard_amplification_iterate(inst).failure_probability;
      const double expect = std::pow(std::sin(3.0 * std::asin(std::sqrt(1.0 - e))), 2);
      worst_contrast = std::max(worst_contrast, std::abs(success - expect));
      worst_monotone = std::max(worst_monotone, pi3_composite(inst).failure_probability - e);
    }
    out.push_back(check("pi-phase iterate success = sin^2(3 theta)", worst_contrast, 1e-9));
    out.push_back({"pi/3 composite never increases failure", worst_monotone <= 1e-9,
                   "max (failure - eps) " + fmt(worst_monotone)});
  }

  {
    double worst = 0.0;
    for (std::size_t dim = 2; dim <= 1024; dim *= 2) {
      const StateVector v = random_state(dim, opts.seed + dim);
      const StateVector back = apply_walsh_hadamard(apply_walsh_hadamard(v));
      for (std::size_t i = 0; i < dim; ++i) worst = std::max(worst, std::abs(back[i] - v[i]));
    }
    out.push_back(check("Walsh-Hadamard involution dims 2..1024", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (std::size_t dim : {2u, 3u, 8u, 64u}) {
      for (std::uint64_t k = 0; k < 100; ++k) {
        worst = std::max(worst, haar_random_unitary(dim, opts.seed * 1000 + k).unitarity_defect());
      }
    }
    out.push_back(check("Haar sampler unitarity", worst, 1e-9));
  }

  {
    double worst = 0.0;
    for (std::size_t i = 0; i < 101; ++i) {
      const double eps = double(i) / 101.0;
      worst = std::max(worst, std::abs(younes_success(eps, 1) - (1.0 - eps) * (1.0 + 4.0 * eps * eps)));
    }
    out.push_back(check("Younes q=1 specialization", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (double e0 : {0.05, 0.1, 0.2, 0.5, 1.0}) {
      const EpsilonPrior prior(e0);
      worst = std::max(worst, std::abs(integrate_polynomial(classical_model(1), prior) - e0 * e0 / 3.0));
      worst = std::max(worst, std::abs(integrate_polynomial(mosca_model(), prior) -
                                       (e0 * e0 / 4.0 + e0 * e0 * e0 / 16.0)));
      worst = std::max(worst, std::abs(integrate_polynomial(younes_model(), prior) -
                                       (e0 / 2.0 - 4.0 * e0 * e0 / 3.0 + e0 * e0 * e0)));
      worst = std::max(worst, std::abs(integrate_polynomial(pi3_model(1), prior) - e0 * e0 * e0 / 4.0));
    }
    out.push_back(check("integrated failure closed forms", worst, 1e-14));
  }

  {
    bool ordered = true;
    for (std::size_t i = 1; i <= 200; ++i) {
      const double e = 0.2 * double(i) / 200.0;
      ordered = ordered && pi3_failure_closed_form(e, 1) < mosca_failure(e) &&
                mosca_failure(e) < classical_failure(e, 1) &&
                classical_failure(e, 1) < younes_failure(e, 1);
    }
    out.push_back({"pi3 < mosca < classical < younes on (0, 0.2]", ordered, ""});
  }

  {
    AncillaReport worst{0, 1.0, 1.0, 1.0, true};
    for (std::size_t n : {4u, 8u, 16u}) {
      AncillaReport r = run_ancilla_check(n, 50, opts.seed);
      worst.min_fidelity = std::min(worst.min_fidelity, r.min_fidelity);
      worst.passed = worst.passed && r.passed;
    }
    out.push_back({"six-state ancilla kickback equivalence", worst.passed,
                   "min fidelity deviation " + fmt(1.0 - worst.min_fidelity)});
    const StateVector anc = prepare_phase_ancilla();
    double eig = 0.0;
    for (std::size_t b = 0; b < kAncillaDim; ++b) {
      // (S a)[b] = a[b-1] must equal e^{i pi/3} a[b]
      eig = std::max(eig, std::abs(anc[(b + kAncillaDim - 1) % kAncillaDim] - w * anc[b]));
    }
    out.push_back(check("ancilla eigenvalue e^{i pi/3}", eig, 1e-12));
  }

  return out;
}

AncillaReport run_ancilla_check(std::size_t n, std::size_t trials, std::uint64_t seed) {
  AncillaReport r{trials, 1.0, 0.0, 0.0, false};
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = derive_stream(seed, t);
    const StateVector v = random_state(n, rng());
    r.min_fidelity = std::min(r.min_fidelity, kickback_equivalence(v, random_subset(n, rng)));
  }
  const StateVector v = random_state(n, seed);
  r.full_set_fidelity = kickback_equivalence(v, MarkedSet::full(n));
  r.empty_set_fidelity = kickback_equivalence(v, MarkedSet::empty(n));
  const double tol = 1e-9;
  r.min_fidelity = std::min({r.min_fidelity, r.full_set_fidelity, r.empty_set_fidelity});
  r.passed = r.min_fidelity >= 1.0 - tol;
  return r;
}

}  // namespace fpsearch::tools
