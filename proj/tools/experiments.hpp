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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fpsearch::tools {

enum class Method { kClosedForm, kSimulated, kMonteCarlo };

const char* method_name(Method m);

/// One row of the failure-probability comparison table.
struct SweepRecord {
  double eps0;
  std::string algorithm;
  std::uint64_t queries;
  double integrated_failure;
  Method method;
  /// Database size, 0 for closed-form rows.
  std::size_t n;
  /// Empty for closed-form rows.
  std::optional<std::uint64_t> seed;
};

/// Algorithm identifiers accepted by `sweep`, in output order.
const std::vector<std::string>& known_algorithms();

struct SweepOptions {
  double eps0_max = 0.2;
  std::size_t grid = 41;
  /// When set, pi3 rows are also produced from simulation at this N.
  std::optional<std::size_t> n;
  std::vector<std::string> algorithms = known_algorithms();
  std::uint64_t seed = 0;
  /// Simpson nodes used for the simulated rows.
  std::size_t quadrature_points = 101;
};

/// eps0 values eps0_max * i / grid for i = 1..grid.
std::vector<double> sweep_grid(double eps0_max, std::size_t grid);

/// Rows sorted by (eps0, algorithm, method).
std::vector<SweepRecord> run_sweep(const SweepOptions& opts);

/// `eps0,algorithm,queries,integrated_failure,method,n,seed`
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);

/// %.17g, round-trip exact for doubles.
std::string format_double(double x);

struct MultiQueryRow {
  unsigned depth;
  std::uint64_t queries;
  double pi3_integrated_failure;
  double classical_integrated_failure;
  /// max |simulated - eps^(3^m)| over the realizable grid, when checked.
  std::optional<double> simulation_max_error;
};

std::vector<MultiQueryRow> run_multiquery(unsigned depth_max, double eps0, std::size_t n,
                                          unsigned simulate_up_to = 2);

void write_multiquery_csv(std::ostream& out, const std::vector<MultiQueryRow>& rows);

struct MonteCarloSummary {
  std::string algorithm;
  std::size_t n;
  double eps0;
  std::uint64_t trials;
  std::uint64_t seed;
  std::uint64_t failures;
  double empirical_failure;
  double ci_low;
  double ci_high;
  /// Exact prior average of the closed form over the size-n realizable grid.
  double predicted;

  bool consistent() const { return predicted >= ci_low && predicted <= ci_high; }
};

/// Wilson score interval for `successes` out of `trials` at z.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z = 1.959963984540054);

/// End-to-end sampled runs: per trial draw eps ~ U(0, eps0), build a random
/// database, run the algorithm ("pi3" or "classical"), record the outcome.
MonteCarloSummary run_monte_carlo(const std::string& algorithm, std::size_t n, double eps0,
                                  std::uint64_t trials, std::uint64_t seed);

void write_monte_carlo_csv(std::ostream& out, const MonteCarloSummary& s);

}  // namespace fpsearch::tools
