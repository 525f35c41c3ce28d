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

#include "commands.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "experiments.hpp"
#include "fpsearch/fixedpoint.hpp"
#include "verify.hpp"

namespace fpsearch::tools {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_power_of_two(std::size_t n, const char* flag) {
  if (!std::has_single_bit(n)) {
    throw UsageError(std::string(flag) + " must be a power of 2 (got " + std::to_string(n) + ")");
  }
}

// Writes CSV produced by `emit` to `path`, or to `out` when path is "-".
void write_csv(const std::string& path, std::ostream& out,
               const std::function<void(std::ostream&)>& emit) {
  if (path == "-") {
    emit(out);
    return;
  }
  std::ostringstream buf;
  emit(buf);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << buf.str();
  file.flush();
  if (!file) throw UsageError("failed writing output file '" + path + "'");
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  require_power_of_two(opts.n, "--n");
  for (std::size_t d : opts.dims) {
    if (d == 0) throw UsageError("--dims entries must be >= 1");
  }
  if (opts.trials == 0) throw UsageError("--trials must be >= 1");
  std::size_t pass = 0;
  std::size_t fail = 0;
  for (const CheckResult& c : run_verify(opts)) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    (c.passed ? pass : fail)++;
  }
  out << "VERIFY pass=" << pass << " fail=" << fail << '\n';
  return fail == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const SweepOptions& opts, const std::string& path, std::ostream& out,
              std::ostream& err) {
  if (!(opts.eps0_max > 0.0 && opts.eps0_max <= 1.0)) throw UsageError("--eps0-max must be in (0, 1]");
  if (opts.grid < 2) throw UsageError("--grid must be >= 2");
  if (opts.n) require_power_of_two(*opts.n, "--n");
  for (const std::string& a : opts.algorithms) {
    const auto& known = known_algorithms();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw UsageError("unknown algorithm '" + a + "' (expected classical, mosca, younes, pi3)");
    }
  }
  const std::vector<SweepRecord> rows = run_sweep(opts);
  write_csv(path, out, [&](std::ostream& os) { write_sweep_csv(os, rows); });
  err << "sweep: " << rows.size() << " rows\n";
  return kExitOk;
}

int cmd_multiquery(unsigned depth_max, double eps0, std::size_t n, const std::string& path,
                   std::ostream& out, std::ostream& err) {
  if (depth_max > kMaxRecursionDepth) {
    throw UsageError("--depth-max must be <= " + std::to_string(kMaxRecursionDepth));
  }
  if (!(eps0 > 0.0 && eps0 <= 1.0)) throw UsageError("--eps0 must be in (0, 1]");
  require_power_of_two(n, "--n");
  const std::vector<MultiQueryRow> rows = run_multiquery(depth_max, eps0, n);
  write_csv(path, out, [&](std::ostream& os) { write_multiquery_csv(os, rows); });

  err << "realizable query counts:";
  bool ok = true;
  for (const MultiQueryRow& r : rows) {
    err << ' ' << r.queries;
    if (r.simulation_max_error && !(*r.simulation_max_error < 1e-9)) ok = false;
  }
  err << "\nsimulation cross-check at N=" << n << (ok ? " passed" : " FAILED") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_ancilla(std::size_t n, std::size_t trials, std::uint64_t seed, std::ostream& out) {
  require_power_of_two(n, "--n");
  if (trials == 0) throw UsageError("--trials must be >= 1");
  const AncillaReport r = run_ancilla_check(n, trials, seed);
  out << "ancilla kickback: N=" << n << " trials=" << r.trials << '\n'
      << "  min fidelity      " << format_double(r.min_fidelity) << '\n'
      << "  full set fidelity " << format_double(r.full_set_fidelity) << '\n'
      << "  empty set fidelity " << format_double(r.empty_set_fidelity) << '\n'
      << (r.passed ? "ANCILLA pass\n" : "ANCILLA fail\n");
  return r.passed ? kExitOk : kExitCheckFailed;
}

int cmd_montecarlo(const std::string& algorithm, std::size_t n, double eps0, std::uint64_t trials,
                   std::uint64_t seed, const std::string& path, std::ostream& out,
                   std::ostream& err) {
  if (trials == 0) throw UsageError("--trials must be >= 1");
  if (!(eps0 > 0.0 && eps0 <= 1.0)) throw UsageError("--eps0 must be in (0, 1]");
  if (algorithm != "pi3" && algorithm != "classical") {
    throw UsageError("--algorithm must be pi3 or classical");
  }
  if (n == 0) throw UsageError("--n must be >= 1");
  if (algorithm == "pi3") require_power_of_two(n, "--n");
  const MonteCarloSummary s = run_monte_carlo(algorithm, n, eps0, trials, seed);
  write_csv(path, out, [&](std::ostream& os) { write_monte_carlo_csv(os, s); });
  err << "montecarlo " << algorithm << ": " << s.failures << '/' << s.trials
      << " failures, rate " << format_double(s.empirical_failure) << ", 95% interval ["
      << format_double(s.ci_low) << ", " << format_double(s.ci_high) << "], predicted "
      << format_double(s.predicted) << (s.consistent() ? " (consistent)" : " (INCONSISTENT)")
      << '\n';
  return s.consistent() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point (pi/3) quantum search simulator"};
  app.name("fpsearch");
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant battery");
  verify_cmd->add_option("--n", verify.n, "Database size for the search checks (power of 2)");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_option("--dims", verify.dims, "Dimensions for Haar-random checks")->delimiter(',');
  verify_cmd->add_option("--trials", verify.trials, "Haar samples per dimension");

  SweepOptions sweep;
  std::size_t sweep_n = 0;
  std::string sweep_algorithms = "classical,mosca,younes,pi3";
  std::string sweep_out = "-";
  auto* sweep_cmd = app.add_subcommand("sweep", "Integrated failure versus eps0");
  sweep_cmd->add_option("--eps0-max", sweep.eps0_max, "Largest eps0");
  sweep_cmd->add_option("--grid", sweep.grid, "Number of eps0 values");
  auto* sweep_n_opt =
      sweep_cmd->add_option("--n", sweep_n, "Add simulated pi3 rows at this database size");
  sweep_cmd->add_option("--algorithms", sweep_algorithms, "Comma-separated algorithms");
  sweep_cmd->add_option("--seed", sweep.seed, "Seed for simulated databases");
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path, - for stdout");

  unsigned mq_depth = 3;
  double mq_eps0 = 0.2;
  std::size_t mq_n = 16;
  std::string mq_out = "-";
  auto* mq_cmd = app.add_subcommand("multiquery", "Recursive composite versus classical");
  mq_cmd->add_option("--depth-max", mq_depth, "Deepest recursion level");
  mq_cmd->add_option("--eps0", mq_eps0, "Prior upper limit");
  mq_cmd->add_option("--n", mq_n, "Database size for the simulation cross-check");
  mq_cmd->add_option("--out", mq_out, "Output CSV path, - for stdout");

  std::size_t anc_n = 8;
  std::size_t anc_trials = 50;
  std::uint64_t anc_seed = 0;
  auto* anc_cmd = app.add_subcommand("ancilla", "Check the six-state ancilla phase oracle");
  anc_cmd->add_option("--n", anc_n, "Main register size (power of 2)");
  anc_cmd->add_option("--trials", anc_trials, "Random (state, marked set) pairs");
  anc_cmd->add_option("--seed", anc_seed, "RNG seed");

  std::size_t mc_n = 1024;
  double mc_eps0 = 0.2;
  std::uint64_t mc_trials = 100000;
  std::uint64_t mc_seed = 0;
  std::string mc_algorithm = "pi3";
  std::string mc_out = "-";
  auto* mc_cmd = app.add_subcommand("montecarlo", "End-to-end sampled runs");
  mc_cmd->add_option("--n", mc_n, "Database size");
  mc_cmd->add_option("--eps0", mc_eps0, "Prior upper limit");
  mc_cmd->add_option("--trials", mc_trials, "Number of trials");
  mc_cmd->add_option("--seed", mc_seed, "RNG seed");
  mc_cmd->add_option("--algorithm", mc_algorithm, "pi3 or classical");
  mc_cmd->add_option("--out", mc_out, "Output CSV path, - for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*sweep_cmd) {
      if (*sweep_n_opt) sweep.n = sweep_n;
      sweep.algorithms.clear();
      std::stringstream ss(sweep_algorithms);
      for (std::string a; std::getline(ss, a, ',');) {
        if (!a.empty()) sweep.algorithms.push_back(a);
      }
      if (sweep.algorithms.empty()) throw UsageError("--algorithms is empty");
      return cmd_sweep(sweep, sweep_out, out, err);
    }
    if (*mq_cmd) return cmd_multiquery(mq_depth, mq_eps0, mq_n, mq_out, out, err);
    if (*anc_cmd) return cmd_ancilla(anc_n, anc_trials, anc_seed, out);
    if (*mc_cmd) {
      return cmd_montecarlo(mc_algorithm, mc_n, mc_eps0, mc_trials, mc_seed, mc_out, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace fpsearch::tools
