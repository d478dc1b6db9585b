#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsetrig/bounds.hpp"
#include "sparsetrig/json_io.hpp"
#include "sparsetrig/model.hpp"
#include "sparsetrig/solver.hpp"

namespace sparsetrig {

/// Raised for malformed or inconsistent experiment configurations.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  int q = 40;
  int d = 1;
  SupportModel support = FixedSize{8};
  /// Sorted, distinct sample counts; from "N_range": [lo, hi] or "N_values".
  std::vector<std::int64_t> N_values;
  int trials_per_N = 100;
  std::uint64_t master_seed = 0;
  double recovery_tolerance = 1e-4;
  bool certify = false;
  SolverOptions solver;
  /// Adds the wall_time_ms column to the records CSV (not reproducible).
  bool record_timing = false;
  unsigned threads = 0;
};

/// Throws ConfigError on missing, malformed or out-of-range fields.
ExperimentConfig config_from_json(const Json& doc);
Json config_to_json(const ExperimentConfig& config);

struct TrialRecord {
  std::int64_t N = 0;
  int trial_index = 0;
  std::uint64_t seed = 0;
  /// linf_error <= recovery_tolerance * coeff_scale.
  bool recovered = false;
  double linf_error = 0.0;
  /// max(1, ||c_true||_inf).
  double coeff_scale = 1.0;
  std::optional<double> certificate_sup;
  std::optional<bool> certified;
  int solver_iterations = 0;
  bool solver_converged = false;
  double wall_time_ms = 0.0;
};

/// Seed of trial i at sample count N, derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t N, int trial_index);

/// One trial: random support, Gaussian coefficients, uniform samples, basis
/// pursuit, comparison with the truth, optional certificate.
TrialRecord run_trial(const ExperimentConfig& config, std::int64_t N, int trial_index);

/// All trials, sorted by (N, trial_index) regardless of scheduling.
std::vector<TrialRecord> run_montecarlo(const ExperimentConfig& config);

std::string emit_records_csv(const std::vector<TrialRecord>& records, bool include_timing = false);
/// `N,trials,failures,failure_rate`, one row per N in ascending order.
std::string emit_failure_curve(const std::vector<TrialRecord>& records);

struct BoundCurveSpec {
  int theorem = 1;
  double M_or_ET = 10.0;
  double D = 10000.0;
  /// One curve per n.
  std::vector<int> n_values;
  std::vector<std::int64_t> N_values;
  OptimizeOptions search;  // n_values inside is ignored
};

/// `N,failure_bound,term1,term2,term3,n,beta,kappa,alpha`, rows ordered by
/// N then n. Each row optimizes beta (and alpha) for that n. Invalid rows
/// report failure_bound 1 with empty term and parameter fields.
std::string emit_bound_curves(const BoundCurveSpec& spec, CensusCache* censuses = nullptr);

}  // namespace sparsetrig
