#include <doctest.h>

#include <random>

#include "fashion/dynamics.hpp"
#include "fashion/errors.hpp"
#include "fashion/graph.hpp"
#include "fashion/oracle.hpp"
#include "test_util.hpp"

using namespace fashion;

namespace {

// von Neumann 4-neighbor torus, built here independently of the library
Network von_neumann_torus(std::int32_t rows, std::int32_t cols) {
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(rows) * cols);
  for (std::int32_t r = 0; r < rows; ++r)
    for (std::int32_t c = 0; c < cols; ++c) {
      auto& row = adj[static_cast<std::size_t>(r) * cols + c];
      row.push_back(((r + 1) % rows) * cols + c);
      row.push_back(((r + rows - 1) % rows) * cols + c);
      row.push_back(r * cols + (c + 1) % cols);
      row.push_back(r * cols + (c + cols - 1) % cols);
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
  return Network::from_adjacency(adj);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("matching pennies dyad has no pure equilibrium") {
  Network net = testutil::dyad();
  TypeAssignment types{AgentType::Conformist, AgentType::Rebel};
  EquilibriumSet set = enumerate_equilibria(net, types);
  CHECK(set.profiles.empty());
  CHECK_FALSE(has_pure_equilibrium(net, types));
}

TEST_CASE("two conformists coordinate") {
  Network net = testutil::dyad();
  TypeAssignment types = testutil::uniform_types(2, AgentType::Conformist);
  EquilibriumSet set = enumerate_equilibria(net, types);
  CHECK(set.profiles == std::vector<std::uint64_t>{0b00, 0b11});
}

TEST_CASE("all-rebel triangle: exactly the six non-constant profiles") {
  Network net = testutil::triangle();
  TypeAssignment types = testutil::uniform_types(3, AgentType::Rebel);
  EquilibriumSet set = enumerate_equilibria(net, types);
  CHECK(set.profiles == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(set.contains(ActionProfile{1, 0, 0}));
  CHECK_FALSE(set.contains(ActionProfile{0, 0, 0}));
}

TEST_CASE("size limit is enforced") {
  Network net = make_torus({5, 5});
  TypeAssignment types = testutil::uniform_types(25, AgentType::Rebel);
  CHECK_THROWS_AS(enumerate_equilibria(net, types, 24), SizeError);
  CHECK_THROWS_AS(has_pure_equilibrium(net, types, 10), SizeError);
}

TEST_CASE("oracle agrees with plain brute force on random instances") {
  std::mt19937_64 rng(414);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 9);
    Network net = testutil::random_graph(n, 0.4, rng);
    TypeAssignment types = testutil::random_types(n, rng);
    EquilibriumSet set = enumerate_equilibria(net, types);
    CHECK(set.profiles == testutil::reference_equilibria(net, types));
    CHECK(has_pure_equilibrium(net, types) == !set.profiles.empty());
    // complement closure
    const std::uint64_t mask = (1ull << n) - 1;
    for (std::uint64_t bits : set.profiles) CHECK(set.contains(~bits & mask));
  }
}

TEST_CASE("all-conformist and all-rebel instances always admit equilibria") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 9);
    Network net = testutil::random_graph(n, 0.4, rng);
    CHECK(has_pure_equilibrium(net, testutil::uniform_types(n, AgentType::Conformist)));
    CHECK(has_pure_equilibrium(net, testutil::uniform_types(n, AgentType::Rebel)));
  }
}

TEST_CASE("runs that report equilibrium land inside the oracle set") {
  std::mt19937_64 rng(616);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 11);
    Network net = testutil::random_graph(n, 0.4, rng);
    TypeAssignment types = testutil::random_types(n, rng);
    EquilibriumSet set = enumerate_equilibria(net, types);
    Rng run_rng(rng());
    ActionProfile start = testutil::random_profile(n, rng);
    RunRecord record = run_dynamics(net, types, start, 0.3, 2000, run_rng);
    if (record.termination.kind == TerminationKind::EquilibriumReached) {
      CHECK(set.contains(record.terminal_profile));
    }
    if (set.profiles.empty())
      CHECK(record.termination.kind != TerminationKind::EquilibriumReached);
  }
}

TEST_CASE("all-rebel perfect configurations exist exactly on bipartite graphs") {
  CHECK(all_rebel_perfect_exists(testutil::cycle(4)));
  CHECK_FALSE(all_rebel_perfect_exists(testutil::cycle(5)));
  CHECK_FALSE(all_rebel_perfect_exists(testutil::triangle()));
  // Moore torus has 3-cycles; von Neumann torus with even dims is bipartite
  CHECK_FALSE(all_rebel_perfect_exists(make_torus({41, 41})));
  CHECK(all_rebel_perfect_exists(von_neumann_torus(6, 8)));
  CHECK_FALSE(all_rebel_perfect_exists(von_neumann_torus(5, 8)));  // odd wrap cycle
}

TEST_CASE("bipartiteness matches brute-force complete all-rebel search") {
  std::mt19937_64 rng(717);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 9);
    Network net = testutil::random_graph(n, 0.35, rng);
    TypeAssignment rebels = testutil::uniform_types(n, AgentType::Rebel);
    bool complete_found = false;
    for (std::uint64_t bits = 0; bits < (1ull << n) && !complete_found; ++bits) {
      ActionProfile x = unpack_profile(bits, n);
      bool all_complete = true;
      for (std::int32_t i = 0; i < n && all_complete; ++i)
        all_complete = likes_count(net, rebels, x, i) == net.degree(i);
      complete_found = all_complete;
    }
    CHECK(all_rebel_perfect_exists(net) == complete_found);
  }
}

}  // TEST_SUITE
