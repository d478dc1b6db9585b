#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "sparsetrig/census.hpp"
#include "sparsetrig/harness.hpp"

using namespace sparsetrig;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.q = 12;
  c.support = FixedSize{3};
  c.N_values = {3, 8, 16};
  c.trials_per_N = 8;
  c.master_seed = 314;
  c.certify = true;
  return c;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("config parsing") {
  const ExperimentConfig c = config_from_json(
      Json::parse(R"({"q":40,"M":8,"N_range":[30,32],"trials_per_N":5,"master_seed":7,"certify":true})"));
  CHECK(c.q == 40);
  CHECK(c.d == 1);
  CHECK(std::get<FixedSize>(c.support).M == 8);
  CHECK(c.N_values == std::vector<std::int64_t>{30, 31, 32});
  CHECK(c.trials_per_N == 5);
  CHECK(c.master_seed == 7);
  CHECK(c.certify);
  CHECK(c.recovery_tolerance == 1e-4);

  const ExperimentConfig back = config_from_json(config_to_json(c));
  CHECK(back.N_values == c.N_values);
  CHECK(back.master_seed == c.master_seed);
  CHECK(config_to_json(back) == config_to_json(c));

  const ExperimentConfig b = config_from_json(Json::parse(R"({"q":5,"tau":0.2,"N_values":[4,2,4],"trials_per_N":1})"));
  CHECK(std::get<Bernoulli>(b.support).tau == 0.2);
  CHECK(b.N_values == std::vector<std::int64_t>{2, 4});
}

TEST_CASE("invalid configs are rejected") {
  const char* bad[] = {
      R"({"q":40,"M":8,"N_range":[30,32]})",
      R"({"q":40,"M":8,"N_range":[32,30],"trials_per_N":1})",
      R"({"q":40,"M":8,"tau":0.1,"N_range":[1,2],"trials_per_N":1})",
      R"({"q":40,"N_range":[1,2],"trials_per_N":1})",
      R"({"q":40,"M":8,"N_range":[1,2],"N_values":[3],"trials_per_N":1})",
      R"({"q":40,"M":8,"N_range":[1,2],"trials_per_N":0})",
      R"({"q":1,"M":8,"N_range":[1,2],"trials_per_N":1})",
      R"({"q":40,"M":8,"N_range":[1,2],"trials_per_N":1,"colour":"red"})",
      R"({"q":"forty","M":8,"N_range":[1,2],"trials_per_N":1})",
      R"({"q":40,"tau":1.5,"N_range":[1,2],"trials_per_N":1})",
      R"([1,2,3])",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK_THROWS_AS(config_from_json(Json::parse(text)), ConfigError);
  }
}

TEST_CASE("records are ordered, deterministic and thread independent") {
  ExperimentConfig c = small_config();
  c.threads = 1;
  const auto a = run_montecarlo(c);
  c.threads = 3;
  const auto b = run_montecarlo(c);
  REQUIRE(a.size() == 24);
  CHECK(emit_records_csv(a) == emit_records_csv(b));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].N == c.N_values[i / 8]);
    CHECK(a[i].trial_index == static_cast<int>(i % 8));
    CHECK(a[i].seed == trial_seed(c.master_seed, a[i].N, a[i].trial_index));
  }
  const TrialRecord single = run_trial(c, 8, 5);
  CHECK(single.linf_error == a[13].linf_error);
}

TEST_CASE("record invariants") {
  ExperimentConfig c = small_config();
  c.N_values = {4, 10, 20};
  c.trials_per_N = 20;
  for (const auto& r : run_montecarlo(c)) {
    CHECK(r.recovered == (r.linf_error <= c.recovery_tolerance * r.coeff_scale));
    CHECK(r.coeff_scale >= 1.0);
    REQUIRE(r.certified.has_value());
    if (*r.certified) CHECK(r.recovered);
  }
}

TEST_CASE("zero sparsity always recovers") {
  ExperimentConfig c = small_config();
  c.support = FixedSize{0};
  c.certify = false;
  for (const auto& r : run_montecarlo(c)) {
    CHECK(r.recovered);
    CHECK_FALSE(r.certified.has_value());
  }
}

TEST_CASE("records CSV") {
  ExperimentConfig c = small_config();
  c.N_values = {8};
  c.trials_per_N = 2;
  const auto records = run_montecarlo(c);
  const auto rows = lines(emit_records_csv(records));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] ==
        "N,trial_index,seed,recovered,linf_error,coeff_scale,certificate_sup,certified,solver_iterations,solver_converged");
  CHECK(rows[1].rfind("8,0,", 0) == 0);
  CHECK(lines(emit_records_csv(records, true))[0].ends_with(",wall_time_ms"));
}

TEST_CASE("failure curve") {
  std::vector<TrialRecord> records(5);
  for (int i = 0; i < 5; ++i) {
    records[i].N = i < 3 ? 12 : 7;
    records[i].recovered = i % 2 == 0;
  }
  const auto rows = lines(emit_failure_curve(records));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "N,trials,failures,failure_rate");
  CHECK(rows[1] == "7,2,1,0.5");
  CHECK(rows[2] == "12,3,1,0.3333333333333333");
}

TEST_CASE("bound curves") {
  BoundCurveSpec one;
  one.theorem = 1;
  one.M_or_ET = 10;
  one.D = 10000;
  one.N_values = {1000, 3000};
  const auto rows = lines(emit_bound_curves(one));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "N,failure_bound,term1,term2,term3,n,beta,kappa,alpha");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::count(rows[i].begin(), rows[i].end(), ',') == 8);

  one.N_values.clear();
  CHECK(lines(emit_bound_curves(one)).size() == 1);

  CensusCache censuses;
  for (auto [ET, D] : {std::pair{4.0, 5000.0}, std::pair{8.0, 20000.0}}) {
    BoundCurveSpec two;
    two.theorem = 2;
    two.M_or_ET = ET;
    two.D = D;
    two.N_values = {2000};
    CHECK(lines(emit_bound_curves(two, &censuses)).size() == 4);
  }

  BoundCurveSpec too_big;
  too_big.theorem = 2;
  too_big.M_or_ET = 4.0;
  too_big.D = 5000.0;
  too_big.n_values = {5};
  too_big.N_values = {1000};
  CHECK_THROWS_AS(emit_bound_curves(too_big, &censuses), CapacityError);
}
