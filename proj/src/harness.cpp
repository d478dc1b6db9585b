#include "sparsetrig/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "sparsetrig/csv.hpp"
#include "sparsetrig/rng.hpp"

namespace sparsetrig {

namespace {

template <class T>
T config_field(const Json& doc, const char* name) {
  try {
    return doc.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field '") + name + "': " + e.what());
  }
}

template <class T>
T config_field(const Json& doc, const char* name, T fallback) {
  return doc.contains(name) ? config_field<T>(doc, name) : fallback;
}

}  // namespace

ExperimentConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {"q", "d", "M", "tau", "N_range", "N_values", "trials_per_N",
                                              "master_seed", "recovery_tolerance", "certify", "solver",
                                              "record_timing", "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  ExperimentConfig c;
  c.q = config_field<int>(doc, "q");
  c.d = config_field<int>(doc, "d", 1);
  if (c.q < 0 || c.d < 1) throw ConfigError("config requires q >= 0 and d >= 1");

  if (doc.contains("M") == doc.contains("tau")) throw ConfigError("config requires exactly one of 'M' and 'tau'");
  if (doc.contains("M")) {
    const auto M = config_field<std::int64_t>(doc, "M");
    if (M < 0) throw ConfigError("M must be nonnegative");
    c.support = FixedSize{M};
  } else {
    const auto tau = config_field<double>(doc, "tau");
    if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("tau must lie in (0,1)");
    c.support = Bernoulli{tau};
  }

  if (doc.contains("N_range") == doc.contains("N_values")) {
    throw ConfigError("config requires exactly one of 'N_range' and 'N_values'");
  }
  if (doc.contains("N_range")) {
    const auto range = config_field<std::vector<std::int64_t>>(doc, "N_range");
    if (range.size() != 2 || range[0] < 1 || range[1] < range[0]) {
      throw ConfigError("N_range must be [lo, hi] with 1 <= lo <= hi");
    }
    for (std::int64_t N = range[0]; N <= range[1]; ++N) c.N_values.push_back(N);
  } else {
    c.N_values = config_field<std::vector<std::int64_t>>(doc, "N_values");
    if (c.N_values.empty()) throw ConfigError("N_values must be nonempty");
    for (auto N : c.N_values) {
      if (N < 1) throw ConfigError("every N must be at least 1");
    }
    std::sort(c.N_values.begin(), c.N_values.end());
    c.N_values.erase(std::unique(c.N_values.begin(), c.N_values.end()), c.N_values.end());
  }

  c.trials_per_N = config_field<int>(doc, "trials_per_N");
  if (c.trials_per_N < 1) throw ConfigError("trials_per_N must be at least 1");
  c.master_seed = config_field<std::uint64_t>(doc, "master_seed", 0);
  c.recovery_tolerance = config_field<double>(doc, "recovery_tolerance", 1e-4);
  if (!(c.recovery_tolerance > 0.0)) throw ConfigError("recovery_tolerance must be positive");
  c.certify = config_field<bool>(doc, "certify", false);
  c.record_timing = config_field<bool>(doc, "record_timing", false);
  c.threads = config_field<unsigned>(doc, "threads", 0u);
  if (doc.contains("solver")) {
    const Json& s = doc.at("solver");
    c.solver.max_iterations = config_field<int>(s, "max_iterations", c.solver.max_iterations);
    c.solver.primal_tolerance = config_field<double>(s, "primal_tolerance", c.solver.primal_tolerance);
    c.solver.dual_tolerance = config_field<double>(s, "dual_tolerance", c.solver.dual_tolerance);
    c.solver.penalty = config_field<double>(s, "penalty", c.solver.penalty);
    if (c.solver.max_iterations < 1 || !(c.solver.primal_tolerance > 0.0) || !(c.solver.dual_tolerance > 0.0) ||
        !(c.solver.penalty > 0.0)) {
      throw ConfigError("invalid solver options");
    }
  }

  try {
    const FrequencyGrid grid(c.q, c.d);
    if (const auto* fixed = std::get_if<FixedSize>(&c.support); fixed && fixed->M > grid.size()) {
      throw ConfigError("M exceeds the grid size D");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  Json doc = {{"q", c.q},
              {"d", c.d},
              {"N_values", c.N_values},
              {"trials_per_N", c.trials_per_N},
              {"master_seed", c.master_seed},
              {"recovery_tolerance", c.recovery_tolerance},
              {"certify", c.certify},
              {"record_timing", c.record_timing},
              {"solver",
               {{"max_iterations", c.solver.max_iterations},
                {"primal_tolerance", c.solver.primal_tolerance},
                {"dual_tolerance", c.solver.dual_tolerance},
                {"penalty", c.solver.penalty}}}};
  if (const auto* fixed = std::get_if<FixedSize>(&c.support)) {
    doc["M"] = fixed->M;
  } else {
    doc["tau"] = std::get<Bernoulli>(c.support).tau;
  }
  return doc;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t N, int trial_index) {
  const std::uint64_t index = (static_cast<std::uint64_t>(N) << 32) | static_cast<std::uint32_t>(trial_index);
  return derive_seed(master_seed, StreamRole::Trial, index);
}

TrialRecord run_trial(const ExperimentConfig& config, std::int64_t N, int trial_index) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.N = N;
  rec.trial_index = trial_index;
  rec.seed = trial_seed(config.master_seed, N, trial_index);

  const FrequencyGrid grid(config.q, config.d);
  const auto support = draw_support(grid, config.support, derive_seed(rec.seed, StreamRole::Support));
  const SparseTrigPoly poly = draw_coefficients(grid, support, derive_seed(rec.seed, StreamRole::Coefficients));
  const SamplingSet X = draw_sampling_set(grid, static_cast<std::size_t>(N), derive_seed(rec.seed, StreamRole::Points));

  const auto all = grid.enumerate();
  const BPProblem problem{fourier_matrix(X, all), sample_values(poly, X)};
  const BPSolution sol = solve_basis_pursuit(problem, config.solver);
  const Eigen::VectorXcd truth = poly.dense();

  rec.coeff_scale = std::max(1.0, poly.max_abs_coefficient());
  rec.linf_error = (sol.coeffs - truth).cwiseAbs().maxCoeff();
  rec.recovered = rec.linf_error <= config.recovery_tolerance * rec.coeff_scale;
  rec.solver_iterations = sol.iterations;
  rec.solver_converged = sol.converged;
  if (config.certify && poly.support_size() > 0) {
    const CertificateReport cert = dual_certificate(X, grid, poly);
    rec.certificate_sup = cert.sup_off_support;
    rec.certified = cert.certified;
  }
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<TrialRecord> run_montecarlo(const ExperimentConfig& config) {
  std::vector<std::pair<std::int64_t, int>> jobs;
  for (auto N : config.N_values) {
    for (int i = 0; i < config.trials_per_N; ++i) jobs.emplace_back(N, i);
  }
  std::vector<TrialRecord> records(jobs.size());
  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < jobs.size(); j += workers) {
          records[j] = run_trial(config, jobs[j].first, jobs[j].second);
        }
      });
    }
  }
  return records;
}

std::string emit_records_csv(const std::vector<TrialRecord>& records, bool include_timing) {
  std::ostringstream out;
  out << "N,trial_index,seed,recovered,linf_error,coeff_scale,certificate_sup,certified,solver_iterations,"
         "solver_converged";
  if (include_timing) out << ",wall_time_ms";
  out << '\n';
  for (const auto& r : records) {
    out << r.N << ',' << r.trial_index << ',' << r.seed << ',' << (r.recovered ? 1 : 0) << ','
        << format_double(r.linf_error) << ',' << format_double(r.coeff_scale) << ','
        << format_double(r.certificate_sup) << ',' << (r.certified ? (*r.certified ? "1" : "0") : "") << ','
        << r.solver_iterations << ',' << (r.solver_converged ? 1 : 0);
    if (include_timing) out << ',' << format_double(r.wall_time_ms);
    out << '\n';
  }
  return out.str();
}

std::string emit_failure_curve(const std::vector<TrialRecord>& records) {
  std::map<std::int64_t, std::pair<int, int>> by_N;  // trials, failures
  for (const auto& r : records) {
    auto& [trials, failures] = by_N[r.N];
    ++trials;
    if (!r.recovered) ++failures;
  }
  std::ostringstream out;
  out << "N,trials,failures,failure_rate\n";
  for (const auto& [N, tf] : by_N) {
    out << N << ',' << tf.first << ',' << tf.second << ','
        << format_double(static_cast<double>(tf.second) / tf.first) << '\n';
  }
  return out.str();
}

std::string emit_bound_curves(const BoundCurveSpec& spec, CensusCache* censuses) {
  if (spec.theorem != 1 && spec.theorem != 2) throw std::invalid_argument("emit_bound_curves: theorem must be 1 or 2");
  std::optional<CensusCache> local;
  if (spec.theorem == 2 && censuses == nullptr) censuses = &local.emplace();
  std::vector<int> n_values = spec.n_values;
  if (n_values.empty()) n_values = spec.theorem == 1 ? std::vector<int>{3, 4, 5, 6, 7} : std::vector<int>{2, 3, 4};
  if (spec.theorem == 1 && (spec.M_or_ET < 1.0 || std::floor(spec.M_or_ET) != spec.M_or_ET)) {
    throw std::invalid_argument("emit_bound_curves: theorem 1 needs an integer M >= 1");
  }

  std::ostringstream out;
  out << "N,failure_bound,term1,term2,term3,n,beta,kappa,alpha\n";
  for (auto N : spec.N_values) {
    for (int n : n_values) {
      OptimizeOptions search = spec.search;
      search.n_values = {n};
      const BoundReport r = spec.theorem == 1
                                ? optimize_thm1(static_cast<std::int64_t>(spec.M_or_ET), N, spec.D, search)
                                : optimize_thm2(spec.M_or_ET, N, spec.D, *censuses, search);
      out << N << ',' << format_double(r.failure_bound) << ',';
      if (r.params_valid) {
        out << format_double(r.terms[0].second) << ',' << format_double(r.terms[1].second) << ','
            << (r.terms.size() > 2 ? format_double(r.terms[2].second) : std::string()) << ',' << n << ','
            << format_double(r.beta) << ',' << format_double(r.kappa) << ','
            << (spec.theorem == 2 ? format_double(r.alpha) : std::string());
      } else {
        out << ",,," << n << ",,,";
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace sparsetrig
