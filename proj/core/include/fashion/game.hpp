#pragma once

#include <cstdint>
#include <vector>

#include "fashion/network.hpp"

namespace fashion {

enum class AgentType : std::uint8_t { Conformist, Rebel };

/// Per-node type label; length must match the network it is used with.
using TypeAssignment = std::vector<AgentType>;

/// Per-node binary action, values 0 or 1.
using ActionProfile = std::vector<std::uint8_t>;

/// Number of neighbors agent i likes: same-action neighbors for a
/// conformist, different-action neighbors for a rebel.
std::int32_t likes_count(const Network& net, const TypeAssignment& types,
                         const ActionProfile& profile, std::int32_t i);

/// likes - hates = 2 * likes - degree. Range [-deg(i), +deg(i)], same parity
/// as deg(i).
std::int32_t utility(const Network& net, const TypeAssignment& types,
                     const ActionProfile& profile, std::int32_t i);

/// likes / degree; 1.0 for isolated agents.
double satisfaction_degree(const Network& net, const TypeAssignment& types,
                           const ActionProfile& profile, std::int32_t i);

/// utility >= 0; for degree >= 1 this is satisfaction_degree >= 0.5.
bool is_satisfied(const Network& net, const TypeAssignment& types,
                  const ActionProfile& profile, std::int32_t i);

/// Every agent satisfied, i.e. the profile is a pure Nash equilibrium.
bool is_equilibrium(const Network& net, const TypeAssignment& types,
                    const ActionProfile& profile);

/// likes_count for all agents in one O(E) pass. Backbone of the dynamic and
/// the indices; out is resized to node_count.
void likes_scan(const Network& net, const TypeAssignment& types,
                const ActionProfile& profile, std::vector<std::int32_t>& out);

namespace detail {
void check_instance(const Network& net, const TypeAssignment& types,
                    const ActionProfile& profile);
void check_agent(const Network& net, std::int32_t i);
}  // namespace detail

}  // namespace fashion
