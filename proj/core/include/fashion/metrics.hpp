#pragma once

#include <cstdint>
#include <span>

#include "fashion/game.hpp"
#include "fashion/network.hpp"

namespace fashion {

struct RunRecord;

/// Exact per-profile tallies. Ratios are divided out once at reporting time
/// so aggregation stays free of floating-point order effects.
struct IndexCounts {
  std::int64_t n = 0;
  std::int64_t satisfied = 0;           // utility >= 0
  std::int64_t completely_satisfied = 0;  // satisfaction degree 1
  double satisfaction_sum = 0.0;          // sum of likes/deg, agent-id order

  bool equilibrium() const { return satisfied == n; }
};

/// The three per-profile indices.
struct IndexTriple {
  double cooperation_degree = 0.0;
  double average_satisfaction = 0.0;
  double complete_ratio = 0.0;
};

IndexCounts index_counts(const Network& net, const TypeAssignment& types,
                         const ActionProfile& profile);

IndexTriple indices(const IndexCounts& counts);
IndexTriple indices(const Network& net, const TypeAssignment& types,
                    const ActionProfile& profile);

/// Fraction of satisfied agents. 1 exactly iff the profile is an equilibrium.
double cooperation_degree(const Network& net, const TypeAssignment& types,
                          const ActionProfile& profile);

/// Mean of per-agent satisfaction degrees.
double average_satisfaction(const Network& net, const TypeAssignment& types,
                            const ActionProfile& profile);

/// Fraction of agents with satisfaction degree 1.
double complete_ratio(const Network& net, const TypeAssignment& types,
                      const ActionProfile& profile);

/// Fraction of runs whose terminal profile is a pure Nash equilibrium.
/// Throws ParameterError on an empty batch.
double equilibrium_ratio(std::span<const RunRecord> records);

}  // namespace fashion
