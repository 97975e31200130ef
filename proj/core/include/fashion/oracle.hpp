#pragma once

#include <cstdint>
#include <vector>

#include "fashion/game.hpp"
#include "fashion/network.hpp"

namespace fashion {

/// All pure Nash equilibria of an instance, as bit patterns with bit i
/// holding agent i's action (agent 0 is the least significant bit).
/// Sorted ascending, duplicate-free.
struct EquilibriumSet {
  std::int32_t n = 0;
  std::vector<std::uint64_t> profiles;

  bool contains(std::uint64_t profile) const;
  bool contains(const ActionProfile& profile) const;
};

std::uint64_t pack_profile(const ActionProfile& profile);
ActionProfile unpack_profile(std::uint64_t bits, std::int32_t n);

/// Exhaustive search over all 2^n profiles with incremental satisfaction
/// pruning: a branch dies as soon as some agent can no longer reach
/// utility >= 0 even if all her unassigned neighbors turn out liked.
/// Throws SizeError when node_count exceeds limit_n.
EquilibriumSet enumerate_equilibria(const Network& net, const TypeAssignment& types,
                                    std::int32_t limit_n = 24);

/// True iff at least one pure equilibrium exists; stops at the first hit.
bool has_pure_equilibrium(const Network& net, const TypeAssignment& types,
                          std::int32_t limit_n = 24);

/// With all agents rebels, a profile giving everyone complete satisfaction
/// exists iff the graph is bipartite (2-coloring check, any size).
bool all_rebel_perfect_exists(const Network& net);

}  // namespace fashion
