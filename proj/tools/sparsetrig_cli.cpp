#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparsetrig/bounds.hpp"
#include "sparsetrig/census.hpp"
#include "sparsetrig/harness.hpp"
#include "sparsetrig/json_io.hpp"
#include "sparsetrig/rng.hpp"
#include "sparsetrig/stirling.hpp"

using namespace sparsetrig;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::vector<std::int64_t> expand_N(const std::vector<std::int64_t>& range, const std::vector<std::int64_t>& values) {
  if (!values.empty()) return values;
  if (range.size() != 2 || range[0] < 1 || range[1] < range[0]) {
    throw std::invalid_argument("--N-range needs lo hi with 1 <= lo <= hi");
  }
  std::vector<std::int64_t> Ns;
  for (auto N = range[0]; N <= range[1]; ++N) Ns.push_back(N);
  return Ns;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse trigonometric polynomial recovery and its combinatorial bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;
  app.add_option("--out", out, "Output file (default: stdout)");
  app.add_option("--threads", threads, "Worker threads (0: all cores)");
  app.add_option("--seed", seed, "Master seed");

  auto* qtable = app.add_subcommand("qtable", "Rank census Q(n,.) or Q*(K,m,.) as CSV");
  int q_n = 0;
  bool star = false;
  int star_K = 0;
  int star_m = 0;
  qtable->add_option("--n", q_n, "Even ground set size");
  qtable->add_flag("--star", star, "Compute Q*(K,m) instead");
  qtable->add_option("--K", star_K, "Columns K for Q*");
  qtable->add_option("--m", star_m, "Rows m for Q*");

  auto* stirling = app.add_subcommand("stirling", "Associated Stirling numbers S2(n,k) as CSV");
  int max_n = 16;
  bool totals = false;
  stirling->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(0, 400));
  stirling->add_flag("--totals", totals, "Emit n,p_n,b_n instead");

  auto* bound = app.add_subcommand("bound", "Failure-probability bound curves as CSV");
  int theorem = 1;
  double M_or_ET = 10.0;
  double D = 10000.0;
  std::vector<std::int64_t> N_range;
  std::vector<std::int64_t> N_values;
  std::vector<int> n_values;
  OptimizeOptions search;
  bound->add_option("--theorem", theorem, "1 (fixed sparsity) or 2 (random support)")->check(CLI::IsMember({1, 2}));
  bound->add_option("--M,--ET", M_or_ET, "Sparsity M (theorem 1) or E|T| (theorem 2)");
  bound->add_option("--D", D, "Grid size (2q+1)^d");
  bound->add_option("--N-range", N_range, "Inclusive range lo hi")->expected(2);
  bound->add_option("--N-values", N_values, "Explicit sample counts");
  bound->add_option("--n-values", n_values, "One curve per n");
  bound->add_option("--beta-lo", search.beta_lo);
  bound->add_option("--beta-hi", search.beta_hi);
  bound->add_option("--beta-step", search.beta_step);

  auto* recover = app.add_subcommand("recover", "Basis pursuit recovery with certificate, as JSON");
  std::string input;
  std::string samples_path;
  recover->add_option("--input", input, "Polynomial JSON (may also hold the points)")->required();
  recover->add_option("--samples", samples_path, "Sampling set JSON");

  auto* montecarlo = app.add_subcommand("montecarlo", "Recovery experiment records as CSV");
  std::string config_path;
  std::string curve_path;
  bool timing = false;
  montecarlo->add_option("--config", config_path, "Experiment config JSON")->required();
  montecarlo->add_option("--failure-curve", curve_path, "Also write N,trials,failures,failure_rate");
  montecarlo->add_flag("--timing", timing, "Include the wall_time_ms column");

  auto* instance = app.add_subcommand("instance", "Random instance JSON (polynomial and points)");
  int inst_q = 3;
  int inst_d = 1;
  std::int64_t inst_M = 1;
  std::int64_t inst_N = 5;
  instance->add_option("--q", inst_q);
  instance->add_option("--d", inst_d);
  instance->add_option("--M", inst_M);
  instance->add_option("--N", inst_N);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (qtable->parsed()) {
      CensusOptions options;
      options.threads = threads;
      QTable table;
      if (star) {
        if (star_K < 1 || star_m < 1) throw std::invalid_argument("--star needs --K and --m");
        table = compute_Q_star(star_K, star_m, options);
      } else {
        table = compute_Q(q_n, options);
      }
      emit(emit_qtable_csv(table), out);
    } else if (stirling->parsed()) {
      std::ostringstream csv;
      if (totals) {
        csv << "n,p_n,b_n\n";
        for (int n = 1; n <= max_n; ++n) csv << n << ',' << p_n(n) << ',' << bell(n) << '\n';
      } else {
        const StirlingCache cache(max_n);
        csv << "n,k,S2\n";
        for (int n = 2; n <= max_n; ++n) {
          for (int k = 1; 2 * k <= n; ++k) csv << n << ',' << k << ',' << cache.assoc(n, k) << '\n';
        }
      }
      emit(csv.str(), out);
    } else if (bound->parsed()) {
      BoundCurveSpec spec;
      spec.theorem = theorem;
      spec.M_or_ET = M_or_ET;
      spec.D = D;
      spec.n_values = n_values;
      spec.N_values = N_range.empty() && N_values.empty() ? std::vector<std::int64_t>{} : expand_N(N_range, N_values);
      spec.search = search;
      CensusCache censuses(threads);
      emit(emit_bound_curves(spec, &censuses), out);
    } else if (recover->parsed()) {
      const Json poly_doc = read_json_file(input);
      const SparseTrigPoly poly = poly_from_json(poly_doc);
      const SamplingSet X = samples_from_json(samples_path.empty() ? poly_doc : read_json_file(samples_path));
      if (X.dim() != poly.grid().dim()) throw std::invalid_argument("sampling set dimension differs from the grid");
      const auto all = poly.grid().enumerate();
      const BPSolution sol = solve_basis_pursuit({fourier_matrix(X, all), sample_values(poly, X)});
      Json doc = {{"solution", solution_to_json(sol, poly.grid())},
                  {"exact_recovery", is_exact_recovery(sol.coeffs, poly.dense())}};
      if (poly.support_size() > 0) doc["certificate"] = certificate_to_json(dual_certificate(X, poly.grid(), poly));
      emit(doc.dump(2) + "\n", out);
    } else if (montecarlo->parsed()) {
      ExperimentConfig config = config_from_json(read_json_file(config_path));
      if (seed) config.master_seed = *seed;
      if (threads != 0) config.threads = threads;
      if (timing) config.record_timing = true;
      const auto records = run_montecarlo(config);
      emit(emit_records_csv(records, config.record_timing), out);
      if (!curve_path.empty()) write_text_file(curve_path, emit_failure_curve(records));
    } else if (instance->parsed()) {
      const FrequencyGrid grid(inst_q, inst_d);
      if (inst_N < 1) throw std::invalid_argument("--N must be at least 1");
      const std::uint64_t s = seed.value_or(0);
      const auto support = draw_support(grid, FixedSize{inst_M}, derive_seed(s, StreamRole::Support));
      const SparseTrigPoly poly = draw_coefficients(grid, support, derive_seed(s, StreamRole::Coefficients));
      const SamplingSet X = draw_sampling_set(grid, static_cast<std::size_t>(inst_N), derive_seed(s, StreamRole::Points));
      emit(instance_to_json(poly, X).dump(2) + "\n", out);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
