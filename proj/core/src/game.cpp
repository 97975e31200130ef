#include "fashion/game.hpp"

#include <string>

#include "fashion/errors.hpp"

namespace fashion {

namespace detail {

void check_instance(const Network& net, const TypeAssignment& types,
                    const ActionProfile& profile) {
  const auto n = static_cast<std::size_t>(net.node_count());
  if (types.size() != n)
    throw ParameterError("type assignment length " + std::to_string(types.size()) +
                         " does not match network size " + std::to_string(n));
  if (profile.size() != n)
    throw ParameterError("action profile length " + std::to_string(profile.size()) +
                         " does not match network size " + std::to_string(n));
}

void check_agent(const Network& net, std::int32_t i) {
  if (i < 0 || i >= net.node_count())
    throw ParameterError("agent id " + std::to_string(i) + " out of range");
}

}  // namespace detail

std::int32_t likes_count(const Network& net, const TypeAssignment& types,
                         const ActionProfile& profile, std::int32_t i) {
  detail::check_instance(net, types, profile);
  detail::check_agent(net, i);
  std::int32_t same = 0;
  for (std::int32_t j : net.neighbors(i)) same += profile[j] == profile[i];
  return types[i] == AgentType::Conformist ? same : net.degree(i) - same;
}

std::int32_t utility(const Network& net, const TypeAssignment& types,
                     const ActionProfile& profile, std::int32_t i) {
  return 2 * likes_count(net, types, profile, i) - net.degree(i);
}

double satisfaction_degree(const Network& net, const TypeAssignment& types,
                           const ActionProfile& profile, std::int32_t i) {
  std::int32_t likes = likes_count(net, types, profile, i);
  std::int32_t deg = net.degree(i);
  return deg == 0 ? 1.0 : static_cast<double>(likes) / deg;
}

bool is_satisfied(const Network& net, const TypeAssignment& types,
                  const ActionProfile& profile, std::int32_t i) {
  return utility(net, types, profile, i) >= 0;
}

void likes_scan(const Network& net, const TypeAssignment& types,
                const ActionProfile& profile, std::vector<std::int32_t>& out) {
  const std::int32_t n = net.node_count();
  out.resize(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    const std::uint8_t mine = profile[i];
    std::int32_t same = 0;
    for (std::int32_t j : net.neighbors(i)) same += profile[j] == mine;
    out[i] = types[i] == AgentType::Conformist ? same : net.degree(i) - same;
  }
}

bool is_equilibrium(const Network& net, const TypeAssignment& types,
                    const ActionProfile& profile) {
  detail::check_instance(net, types, profile);
  const std::int32_t n = net.node_count();
  for (std::int32_t i = 0; i < n; ++i) {
    const std::uint8_t mine = profile[i];
    std::int32_t same = 0;
    for (std::int32_t j : net.neighbors(i)) same += profile[j] == mine;
    std::int32_t likes = types[i] == AgentType::Conformist ? same : net.degree(i) - same;
    if (2 * likes < net.degree(i)) return false;
  }
  return true;
}

}  // namespace fashion
