#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fashion/errors.hpp"
#include "fashion/sweep.hpp"

using namespace fashion;

namespace {

SweepConfig tiny_torus_config() {
  SweepConfig config;
  config.family = Family::Torus;
  config.rows = 7;
  config.cols = 7;
  config.r_values = parse_decimal_list("0,0.5,1");
  config.p_values = parse_decimal_list("0.2,0.6");
  config.replicates = 3;
  config.max_steps = 60;
  config.master_seed = 2024;
  return config;
}

std::string aggregate_csv(const SweepConfig& config) {
  std::ostringstream out;
  write_aggregate_csv(out, run_sweep(config));
  return out.str();
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("row count is the product of the list lengths, in canonical order") {
  SweepResult result = run_sweep(tiny_torus_config());
  REQUIRE(result.rows.size() == 6);
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    const auto& a = result.rows[i - 1];
    const auto& b = result.rows[i];
    bool ordered = a.r < b.r || (a.r == b.r && a.p < b.p);
    CHECK(ordered);
  }
  for (const auto& row : result.rows) {
    CHECK(row.n == 49);
    CHECK(row.cooperation_degree >= 0.0);
    CHECK(row.cooperation_degree <= 1.0);
    CHECK(row.complete_ratio <= row.cooperation_degree);
    CHECK(row.mean_steps <= 60.0);
  }
}

TEST_CASE("degenerate grid equals the single run it wraps") {
  SweepConfig config = tiny_torus_config();
  config.r_values = parse_decimal_list("0.5");
  config.p_values = parse_decimal_list("0.6");
  config.replicates = 1;
  SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 1);

  RunConfig rc;
  rc.network = TorusSpec{7, 7};
  rc.rebel_ratio = 0.5;
  rc.update_probability = 0.6;
  rc.max_steps = 60;
  rc.master_seed = derive_seed(derive_seed(2024, stream::sweep), 0);
  RunRecord record = run(rc);
  IndexTriple t = indices(record.terminal_counts);
  CHECK(result.rows[0].cooperation_degree == t.cooperation_degree);
  CHECK(result.rows[0].average_satisfaction == t.average_satisfaction);
  CHECK(result.rows[0].complete_ratio == t.complete_ratio);
  CHECK(result.rows[0].mean_steps == static_cast<double>(record.steps_executed));
}

TEST_CASE("worker count does not change a single byte") {
  SweepConfig config = tiny_torus_config();
  config.workers = 1;
  std::string serial = aggregate_csv(config);
  config.workers = 4;
  CHECK(aggregate_csv(config) == serial);
  config.workers = 7;
  CHECK(aggregate_csv(config) == serial);
}

TEST_CASE("value list order does not matter") {
  SweepConfig config = tiny_torus_config();
  std::string canonical = aggregate_csv(config);
  std::reverse(config.r_values.begin(), config.r_values.end());
  std::reverse(config.p_values.begin(), config.p_values.end());
  CHECK(aggregate_csv(config) == canonical);
}

TEST_CASE("aggregate rows match recomputation from the per-run log") {
  SweepConfig config = tiny_torus_config();
  config.keep_per_run = true;
  SweepResult result = run_sweep(config);
  REQUIRE(result.per_run.size() == 6 * 3);
  for (std::size_t c = 0; c < result.rows.size(); ++c) {
    std::int64_t satisfied = 0, agents = 0, equilibria = 0;
    for (const auto& outcome : result.per_run) {
      if (outcome.combination != static_cast<std::int64_t>(c)) continue;
      satisfied += outcome.counts.satisfied;
      agents += outcome.counts.n;
      equilibria += outcome.counts.equilibrium();
    }
    CHECK(result.rows[c].cooperation_degree ==
          static_cast<double>(satisfied) / static_cast<double>(agents));
    CHECK(result.rows[c].equilibrium_ratio == doctest::Approx(equilibria / 3.0));
  }
}

TEST_CASE("per-run CSV carries seeds and termination causes") {
  SweepConfig config = tiny_torus_config();
  config.keep_per_run = true;
  SweepResult result = run_sweep(config);
  std::ostringstream out;
  write_per_run_csv(out, config, result);
  std::string text = out.str();
  CHECK(text.rfind("family,n,k,q,r,p,replicate,seed,termination,steps,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 19);  // header + 18 runs
}

TEST_CASE("small-world sweeps cover k and q") {
  SweepConfig config;
  config.family = Family::SmallWorld;
  config.n = 30;
  config.k_values = {4, 6};
  config.q_values = parse_decimal_list("0,0.5");
  config.r_values = parse_decimal_list("0.5");
  config.p_values = parse_decimal_list("0.3");
  config.replicates = 2;
  config.max_steps = 40;
  config.master_seed = 5;
  SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 4);
  CHECK(result.rows[0].k == 4);
  CHECK(result.rows[3].k == 6);
  CHECK(result.rows[1].q.to_string() == "0.5");
}

TEST_CASE("phase scan defaults to the 5000-step budget") {
  SweepConfig network;
  network.family = Family::Torus;
  network.rows = 5;
  network.cols = 5;
  network.master_seed = 77;
  SweepResult result = phase_scan(parse_decimal_list("1"), parse_decimal_list("0.5"), 2, 0, network);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].max_steps == 5000);
  CHECK(result.rows[0].equilibrium_ratio == 1.0);  // tiny all-rebel torus settles
}

TEST_CASE("sweep validation rejects bad grids") {
  SweepConfig config = tiny_torus_config();
  config.r_values.clear();
  CHECK_THROWS_AS(run_sweep(config), ParameterError);

  config = tiny_torus_config();
  config.p_values = parse_decimal_list("0,0.5");  // p=0 illegal
  CHECK_THROWS_AS(run_sweep(config), ParameterError);

  config = tiny_torus_config();
  config.q_values = parse_decimal_list("0.5");  // torus takes no q
  CHECK_THROWS_AS(run_sweep(config), ParameterError);

  config = tiny_torus_config();
  config.replicates = 0;
  CHECK_THROWS_AS(run_sweep(config), ParameterError);
}

}  // TEST_SUITE
