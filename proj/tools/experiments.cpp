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

#include "experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "fpsearch/baselines.hpp"
#include "fpsearch/fixedpoint.hpp"
#include "fpsearch/prior.hpp"

namespace fpsearch::tools {

const char* method_name(Method m) {
  switch (m) {
    case Method::kClosedForm:
      return "closed_form";
    case Method::kSimulated:
      return "simulated";
    case Method::kMonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names = {"classical", "mosca", "pi3", "younes"};
  return names;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> sweep_grid(double eps0_max, std::size_t grid) {
  std::vector<double> out;
  out.reserve(grid);
  for (std::size_t i = 1; i <= grid; ++i) {
    out.push_back(i == grid ? eps0_max : eps0_max * double(i) / double(grid));
  }
  return out;
}

namespace {

FailureModel closed_form_model(const std::string& algorithm) {
  if (algorithm == "classical") return classical_model(1);
  if (algorithm == "mosca") return mosca_model();
  if (algorithm == "younes") return younes_model();
  if (algorithm == "pi3") return pi3_model(1);
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

double simulated_pi3_average(std::size_t n, const EpsilonPrior& prior, std::uint64_t seed,
                             std::size_t points) {
  return integrate_simulated(
      [&](double eps) {
        auto [marked, eps_eff] = make_marked_set(n, eps, seed);
        return database_search(n, marked).failure_probability;
      },
      prior, points);
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepOptions& opts) {
  for (const std::string& a : opts.algorithms) closed_form_model(a);
  std::vector<SweepRecord> rows;
  for (double eps0 : sweep_grid(opts.eps0_max, opts.grid)) {
    const EpsilonPrior prior(eps0);
    for (const std::string& a : opts.algorithms) {
      const FailureModel model = closed_form_model(a);
      rows.push_back({eps0, a, model.queries, integrate_polynomial(model, prior),
                      Method::kClosedForm, 0, std::nullopt});
      if (a == "pi3" && opts.n) {
        rows.push_back({eps0, a, 1,
                        simulated_pi3_average(*opts.n, prior, opts.seed, opts.quadrature_points),
                        Method::kSimulated, *opts.n, opts.seed});
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRecord& x, const SweepRecord& y) {
    return std::tie(x.eps0, x.algorithm, x.method) < std::tie(y.eps0, y.algorithm, y.method);
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  out << "eps0,algorithm,queries,integrated_failure,method,n,seed\n";
  for (const SweepRecord& r : rows) {
    out << format_double(r.eps0) << ',' << r.algorithm << ',' << r.queries << ','
        << format_double(r.integrated_failure) << ',' << method_name(r.method) << ',' << r.n << ',';
    if (r.seed) out << *r.seed;
    out << '\n';
  }
}

std::vector<MultiQueryRow> run_multiquery(unsigned depth_max, double eps0, std::size_t n,
                                          unsigned simulate_up_to) {
  const EpsilonPrior prior(eps0);
  std::vector<MultiQueryRow> rows;
  for (unsigned m = 0; m <= depth_max; ++m) {
    MultiQueryRow row{m, recursion_queries(m), integrate_polynomial(pi3_model(m), prior),
                      integrate_polynomial(classical_model(recursion_queries(m)), prior),
                      std::nullopt};
    if (m <= simulate_up_to) {
      const auto qubits = static_cast<std::size_t>(std::countr_zero(n));
      double worst = 0.0;
      for (std::size_t marked = 0; marked <= n; ++marked) {
        SearchInstance inst(WalshHadamard{qubits}, 0, MarkedSet::prefix(n, marked));
        const CompositeResult r = recursive_composite(inst, m);
        worst = std::max(worst, std::abs(r.failure_probability -
                                         pi3_failure_closed_form(inst.epsilon_eff(), m)));
      }
      row.simulation_max_error = worst;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_multiquery_csv(std::ostream& out, const std::vector<MultiQueryRow>& rows) {
  out << "depth,queries,pi3_integrated_failure,classical_integrated_failure,simulation_max_error\n";
  for (const MultiQueryRow& r : rows) {
    out << r.depth << ',' << r.queries << ',' << format_double(r.pi3_integrated_failure) << ','
        << format_double(r.classical_integrated_failure) << ',';
    if (r.simulation_max_error) out << format_double(*r.simulation_max_error);
    out << '\n';
  }
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  const double n = double(trials);
  const double p = double(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

MonteCarloSummary run_monte_carlo(const std::string& algorithm, std::size_t n, double eps0,
                                  std::uint64_t trials, std::uint64_t seed) {
  if (algorithm != "pi3" && algorithm != "classical") {
    throw std::invalid_argument("montecarlo supports algorithms pi3 and classical, got '" +
                                algorithm + "'");
  }
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  const bool pi3 = algorithm == "pi3";
  if (pi3 && !std::has_single_bit(n)) {
    throw std::invalid_argument("--n must be a power of 2 for pi3");
  }
  const EpsilonPrior prior(eps0);

  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = derive_stream(seed, t);
    const double eps = prior.sample(rng);
    auto [marked, eps_eff] = make_marked_set(n, eps, rng());
    bool success;
    if (pi3) {
      const CompositeResult r = database_search(n, marked);
      const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      success = marked.contains(sample_measurement_from_uniform(r.final_state, u));
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      success = marked.contains(pick(rng)) || marked.contains(pick(rng));
    }
    if (!success) ++failures;
  }

  const auto [lo, hi] = wilson_interval(failures, trials);
  const double predicted = discretized_prior_average(
      [&](double e) { return pi3 ? pi3_failure_closed_form(e, 1) : classical_failure(e, 1); }, n,
      prior);
  return {algorithm, n, eps0, trials, seed, failures, double(failures) / double(trials),
          lo, hi, predicted};
}

void write_monte_carlo_csv(std::ostream& out, const MonteCarloSummary& s) {
  out << "eps0,algorithm,queries,integrated_failure,method,n,seed,trials,failures,ci_low,ci_high,"
         "predicted\n";
  out << format_double(s.eps0) << ',' << s.algorithm << ",1," << format_double(s.empirical_failure)
      << ',' << method_name(Method::kMonteCarlo) << ',' << s.n << ',' << s.seed << ','
      << s.trials << ',' << s.failures << ',' << format_double(s.ci_low) << ','
      << format_double(s.ci_high) << ',' << format_double(s.predicted) << '\n';
}

}  // namespace fpsearch::tools
