#include "fashion/metrics.hpp"

#include "fashion/dynamics.hpp"
#include "fashion/errors.hpp"

namespace fashion {

IndexCounts index_counts(const Network& net, const TypeAssignment& types,
                         const ActionProfile& profile) {
  detail::check_instance(net, types, profile);
  const std::int32_t n = net.node_count();
  IndexCounts counts;
  counts.n = n;
  for (std::int32_t i = 0; i < n; ++i) {
    const std::uint8_t mine = profile[i];
    std::int32_t same = 0;
    for (std::int32_t j : net.neighbors(i)) same += profile[j] == mine;
    const std::int32_t deg = net.degree(i);
    const std::int32_t likes = types[i] == AgentType::Conformist ? same : deg - same;
    counts.satisfied += 2 * likes >= deg;
    counts.completely_satisfied += likes == deg;
    counts.satisfaction_sum += deg == 0 ? 1.0 : static_cast<double>(likes) / deg;
  }
  return counts;
}

IndexTriple indices(const IndexCounts& counts) {
  IndexTriple t;
  const auto n = static_cast<double>(counts.n);
  t.cooperation_degree = counts.satisfied / n;
  t.average_satisfaction = counts.satisfaction_sum / n;
  t.complete_ratio = counts.completely_satisfied / n;
  return t;
}

IndexTriple indices(const Network& net, const TypeAssignment& types,
                    const ActionProfile& profile) {
  return indices(index_counts(net, types, profile));
}

double cooperation_degree(const Network& net, const TypeAssignment& types,
                          const ActionProfile& profile) {
  return indices(net, types, profile).cooperation_degree;
}

double average_satisfaction(const Network& net, const TypeAssignment& types,
                            const ActionProfile& profile) {
  return indices(net, types, profile).average_satisfaction;
}

double complete_ratio(const Network& net, const TypeAssignment& types,
                      const ActionProfile& profile) {
  return indices(net, types, profile).complete_ratio;
}

double equilibrium_ratio(std::span<const RunRecord> records) {
  if (records.empty()) throw ParameterError("equilibrium_ratio of an empty batch");
  std::int64_t hits = 0;
  for (const auto& record : records) hits += record.terminal_counts.equilibrium();
  return static_cast<double>(hits) / static_cast<double>(records.size());
}

}  // namespace fashion
