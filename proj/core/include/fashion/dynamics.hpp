#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "fashion/game.hpp"
#include "fashion/graph.hpp"
#include "fashion/metrics.hpp"
#include "fashion/network.hpp"
#include "fashion/rng.hpp"

namespace fashion {

struct SmallWorldSpec {
  std::int32_t n = 0;
  std::int32_t k = 0;
  double q = 0.0;
};

struct ModifiedSmallWorldSpec {
  TorusSpec torus;
  double q = 0.0;
};

using NetworkSpec = std::variant<TorusSpec, SmallWorldSpec, ModifiedSmallWorldSpec>;

/// One simulation run. Everything downstream (network, types, actions, flip
/// draws) is derived from master_seed through fixed stream tags, so a config
/// reproduces bit-identically.
struct RunConfig {
  NetworkSpec network;
  double rebel_ratio = 0.0;        // r in [0,1]
  double update_probability = 0.0; // p in (0,1]; p=0 would freeze the dynamic
  std::int64_t max_steps = 1;
  std::uint64_t master_seed = 0;
  bool record_trajectory = false;
  std::int64_t snapshot_stride = 0;  // 0 = no snapshots
};

enum class TerminationKind : std::uint8_t {
  EquilibriumReached,
  Period2Cycle,
  StepBudgetExhausted,
};

struct Termination {
  TerminationKind kind = TerminationKind::StepBudgetExhausted;
  std::int64_t step = 0;  // first step at which the cause was detected
};

/// Indices of the profile after a given number of steps, plus how many
/// agents flipped entering it. Row 0 describes the initial profile.
struct TrajectoryPoint {
  IndexTriple indices;
  std::int64_t flipped = 0;
};

struct RunRecord {
  TypeAssignment types;
  ActionProfile terminal_profile;
  std::int64_t steps_executed = 0;
  Termination termination;
  IndexCounts terminal_counts;
  std::vector<TrajectoryPoint> trajectory;  // filled iff record_trajectory
  std::vector<std::pair<std::int64_t, ActionProfile>> snapshots;
};

/// I.i.d. types: Rebel with probability r.
TypeAssignment init_types(std::int64_t n, double r, Rng& rng);

/// I.i.d. uniform actions over {0,1}.
ActionProfile init_profile(std::int64_t n, Rng& rng);

/// One synchronous update: satisfaction is evaluated for every agent against
/// the input profile, every unsatisfied agent independently flips with
/// probability p, flips apply simultaneously. Flip draws consume the stream
/// in ascending agent-id order. Returns the next profile and the flip count.
std::pair<ActionProfile, std::int64_t> step(const Network& net, const TypeAssignment& types,
                                            const ActionProfile& profile, double p, Rng& rng);

/// The network a RunConfig runs on, rebuilt from its graph stream seed.
Network build_network(const RunConfig& config);

/// Iterate the dynamic from an explicit instance until equilibrium (exact
/// early stop: equilibria are absorbing), a period-2 cycle (detected only at
/// p = 1, where the dynamic is deterministic), or the step budget runs out.
RunRecord run_dynamics(const Network& net, TypeAssignment types, ActionProfile initial,
                       double p, std::int64_t max_steps, Rng& rng,
                       bool record_trajectory = false, std::int64_t snapshot_stride = 0);

/// Build the instance from config seeds and run it.
RunRecord run(const RunConfig& config);

/// CSV: step,cooperation_degree,avg_satisfaction,complete_ratio,flipped_count.
/// Requires a record made with record_trajectory = true.
void write_trajectory_csv(std::ostream& out, const RunRecord& record);

}  // namespace fashion
