#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fashion/dynamics.hpp"
#include "fashion/errors.hpp"
#include "fashion/graph.hpp"
#include "fashion/metrics.hpp"
#include "test_util.hpp"

using namespace fashion;

namespace {

std::int64_t hamming(const ActionProfile& a, const ActionProfile& b) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("init_types hits the extremes exactly") {
  Rng rng(42);
  for (AgentType t : init_types(1000, 0.0, rng)) CHECK(t == AgentType::Conformist);
  for (AgentType t : init_types(1000, 1.0, rng)) CHECK(t == AgentType::Rebel);
  CHECK_THROWS_AS(init_types(10, 1.5, rng), ParameterError);
  CHECK_THROWS_AS(init_types(10, -0.5, rng), ParameterError);
}

TEST_CASE("init_types concentrates at the rebel ratio") {
  Rng rng(7);
  const std::int64_t n = 100000;
  TypeAssignment types = init_types(n, 0.5, rng);
  std::int64_t rebels = 0;
  for (AgentType t : types) rebels += t == AgentType::Rebel;
  CHECK(std::abs(static_cast<double>(rebels) / n - 0.5) < 0.01);
}

TEST_CASE("init_profile is uniform, seeded, and works for n=1") {
  Rng rng(7);
  const std::int64_t n = 100000;
  ActionProfile x = init_profile(n, rng);
  std::int64_t ones = 0;
  for (std::uint8_t b : x) ones += b;
  CHECK(std::abs(static_cast<double>(ones) / n - 0.5) < 0.01);

  Rng a(123), b(123);
  CHECK(init_profile(50, a) == init_profile(50, b));

  Rng c(9);
  ActionProfile single = init_profile(1, c);
  CHECK(single.size() == 1);
  CHECK(single[0] <= 1);
}

TEST_CASE("step leaves an equilibrium untouched") {
  Network net = testutil::cycle(4);
  TypeAssignment types = testutil::uniform_types(4, AgentType::Rebel);
  ActionProfile x{0, 1, 0, 1};
  Rng rng(3);
  auto [next, flipped] = step(net, types, x, 0.7, rng);
  CHECK(next == x);
  CHECK(flipped == 0);
}

TEST_CASE("synchronous all-rebel step from a constant profile complements it") {
  Network net = make_torus({5, 5});
  TypeAssignment types = testutil::uniform_types(25, AgentType::Rebel);
  ActionProfile x(25, 1);
  Rng rng(3);
  auto [next, flipped] = step(net, types, x, 1.0, rng);
  CHECK(flipped == 25);
  for (std::uint8_t bit : next) CHECK(bit == 0);
}

TEST_CASE("matching pennies dyad orbits with period 4 under p=1") {
  Network net = testutil::dyad();
  TypeAssignment types{AgentType::Conformist, AgentType::Rebel};
  Rng rng(1);
  ActionProfile x{0, 0};
  // hand-iterated orbit: rebel flips, then conformist chases, ...
  const std::vector<ActionProfile> expected{{0, 1}, {1, 1}, {1, 0}, {0, 0}, {0, 1}};
  for (const auto& want : expected) {
    x = step(net, types, x, 1.0, rng).first;
    CHECK(x == want);
  }
}

TEST_CASE("step rejects p outside (0,1]") {
  Network net = testutil::dyad();
  TypeAssignment types{AgentType::Conformist, AgentType::Rebel};
  ActionProfile x{0, 0};
  Rng rng(1);
  CHECK_THROWS_AS(step(net, types, x, 0.0, rng), ParameterError);
  CHECK_THROWS_AS(step(net, types, x, 1.1, rng), ParameterError);
}

TEST_CASE("flips happen only for unsatisfied agents and match the flip count") {
  std::mt19937_64 seeds(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(seeds() % 14);
    Network net = testutil::random_graph(n, 0.4, seeds);
    TypeAssignment types = testutil::random_types(n, seeds);
    ActionProfile x = testutil::random_profile(n, seeds);
    Rng rng(seeds());
    auto [next, flipped] = step(net, types, x, 0.6, rng);
    CHECK(flipped == hamming(x, next));
    for (std::int32_t i = 0; i < n; ++i)
      if (next[i] != x[i]) CHECK(utility(net, types, x, i) < 0);
  }
}

TEST_CASE("equilibrium initial profile terminates at step zero") {
  Network net = make_torus({5, 5});
  TypeAssignment types = testutil::uniform_types(25, AgentType::Conformist);
  Rng rng(1);
  RunRecord record = run_dynamics(net, types, ActionProfile(25, 1), 0.5, 100, rng);
  CHECK(record.termination.kind == TerminationKind::EquilibriumReached);
  CHECK(record.termination.step == 0);
  CHECK(record.steps_executed == 0);
}

TEST_CASE("all-conformist benchmark runs reach equilibrium fast") {
  int reached = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunConfig config;
    config.network = TorusSpec{41, 41};
    config.rebel_ratio = 0.0;
    config.update_probability = 0.5;
    config.max_steps = 500;
    config.master_seed = seed;
    RunRecord record = run(config);
    if (record.termination.kind == TerminationKind::EquilibriumReached &&
        record.steps_executed < 500)
      ++reached;
  }
  CHECK(reached >= 9);
}

TEST_CASE("synchronous all-rebel run from constant start two-cycles at zero cooperation") {
  Network net = make_torus({7, 7});
  TypeAssignment types = testutil::uniform_types(49, AgentType::Rebel);
  Rng rng(5);
  RunRecord record =
      run_dynamics(net, types, ActionProfile(49, 0), 1.0, 100, rng, true, 1);
  CHECK(record.termination.kind == TerminationKind::Period2Cycle);
  CHECK(record.terminal_counts.satisfied == 0);
  for (const auto& point : record.trajectory)
    CHECK(point.indices.cooperation_degree == 0.0);
  // snapshots alternate between the two constant states
  for (std::size_t s = 2; s < record.snapshots.size(); ++s)
    CHECK(record.snapshots[s].second == record.snapshots[s - 2].second);
}

TEST_CASE("equilibria are absorbing") {
  std::mt19937_64 seeds(303);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(seeds() % 10);
    Network net = testutil::random_graph(n, 0.5, seeds);
    TypeAssignment types = testutil::random_types(n, seeds);
    ActionProfile x = testutil::random_profile(n, seeds);
    if (!is_equilibrium(net, types, x)) continue;
    Rng rng(seeds());
    CHECK(step(net, types, x, 1.0, rng).first == x);
  }
}

TEST_CASE("identical configs give bit-identical records") {
  RunConfig config;
  config.network = SmallWorldSpec{60, 6, 0.3};
  config.rebel_ratio = 0.6;
  config.update_probability = 0.4;
  config.max_steps = 300;
  config.master_seed = 987654321;
  config.record_trajectory = true;
  RunRecord a = run(config);
  RunRecord b = run(config);
  CHECK(a.terminal_profile == b.terminal_profile);
  CHECK(a.types == b.types);
  CHECK(a.steps_executed == b.steps_executed);
  CHECK(a.termination.kind == b.termination.kind);
  CHECK(a.trajectory.size() == b.trajectory.size());
  CHECK(build_network(config) == build_network(config));
}

TEST_CASE("run validates parameters") {
  RunConfig config;
  config.network = TorusSpec{5, 5};
  config.update_probability = 0.0;
  config.max_steps = 10;
  CHECK_THROWS_AS(run(config), ParameterError);
  config.update_probability = 0.5;
  config.rebel_ratio = 2.0;
  CHECK_THROWS_AS(run(config), ParameterError);
  config.rebel_ratio = 0.5;
  config.max_steps = 0;
  CHECK_THROWS_AS(run(config), ParameterError);
  config.max_steps = 10;
  config.network = TorusSpec{2, 5};
  CHECK_THROWS_AS(run(config), ParameterError);
}

TEST_CASE("trajectory CSV lists one row per visited state") {
  Network net = make_torus({5, 5});
  TypeAssignment types = testutil::uniform_types(25, AgentType::Rebel);
  Rng rng(8);
  ActionProfile start = init_profile(25, rng);
  RunRecord record = run_dynamics(net, types, start, 0.5, 50, rng, true);
  std::ostringstream out;
  write_trajectory_csv(out, record);
  std::string text = out.str();
  std::size_t lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  CHECK(lines == record.trajectory.size() + 1);  // header + rows
  CHECK(text.rfind("step,cooperation_degree,avg_satisfaction,complete_ratio,flipped_count\n",
                   0) == 0);
}

}  // TEST_SUITE
