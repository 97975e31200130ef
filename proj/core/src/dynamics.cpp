#include "fashion/dynamics.hpp"

#include <ostream>
#include <string>

#include "fashion/errors.hpp"

namespace fashion {

namespace {

void check_probability(double value, double low, const char* name) {
  if (!(value >= low && value <= 1.0))
    throw ParameterError(std::string(name) + " out of range: " + std::to_string(value));
}

struct IndexFormat {
  // enough digits to round-trip the exact rationals we report
  static std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
  }
};

}  // namespace

TypeAssignment init_types(std::int64_t n, double r, Rng& rng) {
  check_probability(r, 0.0, "rebel ratio");
  TypeAssignment types(static_cast<std::size_t>(n));
  for (auto& t : types)
    t = rng.bernoulli(r) ? AgentType::Rebel : AgentType::Conformist;
  return types;
}

ActionProfile init_profile(std::int64_t n, Rng& rng) {
  if (n < 1) throw ParameterError("profile needs at least one agent");
  ActionProfile profile(static_cast<std::size_t>(n));
  for (auto& x : profile) x = static_cast<std::uint8_t>(rng.next_u64() >> 63);
  return profile;
}

std::pair<ActionProfile, std::int64_t> step(const Network& net, const TypeAssignment& types,
                                            const ActionProfile& profile, double p, Rng& rng) {
  detail::check_instance(net, types, profile);
  if (!(p > 0.0 && p <= 1.0))
    throw ParameterError("update probability must be in (0,1], got " + std::to_string(p));
  const std::int32_t n = net.node_count();
  ActionProfile next = profile;
  std::int64_t flipped = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    const std::uint8_t mine = profile[i];
    std::int32_t same = 0;
    for (std::int32_t j : net.neighbors(i)) same += profile[j] == mine;
    const std::int32_t deg = net.degree(i);
    const std::int32_t likes = types[i] == AgentType::Conformist ? same : deg - same;
    if (2 * likes >= deg) continue;  // satisfied agents never move
    if (rng.bernoulli(p)) {
      next[i] = static_cast<std::uint8_t>(1 - mine);
      ++flipped;
    }
  }
  return {std::move(next), flipped};
}

Network build_network(const RunConfig& config) {
  Rng rng(derive_seed(config.master_seed, stream::graph));
  return std::visit(
      [&rng](const auto& spec) -> Network {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, TorusSpec>) {
          return make_torus(spec);
        } else if constexpr (std::is_same_v<T, SmallWorldSpec>) {
          return make_small_world(spec.n, spec.k, spec.q, rng);
        } else {
          return make_modified_small_world(spec.torus, spec.q, rng);
        }
      },
      config.network);
}

RunRecord run_dynamics(const Network& net, TypeAssignment types, ActionProfile initial,
                       double p, std::int64_t max_steps, Rng& rng,
                       bool record_trajectory, std::int64_t snapshot_stride) {
  detail::check_instance(net, types, initial);
  if (!(p > 0.0 && p <= 1.0))
    throw ParameterError("update probability must be in (0,1], got " + std::to_string(p));
  if (max_steps < 1) throw ParameterError("max_steps must be >= 1");
  if (snapshot_stride < 0) throw ParameterError("snapshot_stride must be >= 0");

  const bool synchronous = p == 1.0;  // cycle detection is sound only here
  RunRecord record;
  record.types = std::move(types);

  ActionProfile current = std::move(initial);
  ActionProfile one_ago, two_ago;
  std::int64_t t = 0;

  auto observe = [&](std::int64_t flipped) {
    if (record_trajectory)
      record.trajectory.push_back({indices(net, record.types, current), flipped});
    if (snapshot_stride > 0 && t % snapshot_stride == 0)
      record.snapshots.emplace_back(t, current);
  };
  observe(0);

  for (;;) {
    if (is_equilibrium(net, record.types, current)) {
      record.termination = {TerminationKind::EquilibriumReached, t};
      break;
    }
    if (t == max_steps) {
      record.termination = {TerminationKind::StepBudgetExhausted, t};
      break;
    }
    if (synchronous) two_ago = std::exchange(one_ago, current);
    auto [next, flipped] = step(net, record.types, current, p, rng);
    current = std::move(next);
    ++t;
    observe(flipped);
    if (synchronous && t >= 2 && current == two_ago) {
      record.termination = {TerminationKind::Period2Cycle, t};
      break;
    }
  }

  record.steps_executed = t;
  record.terminal_counts = index_counts(net, record.types, current);
  record.terminal_profile = std::move(current);
  return record;
}

RunRecord run(const RunConfig& config) {
  check_probability(config.rebel_ratio, 0.0, "rebel ratio");
  Network net = build_network(config);
  Rng types_rng(derive_seed(config.master_seed, stream::types));
  Rng actions_rng(derive_seed(config.master_seed, stream::actions));
  Rng dynamics_rng(derive_seed(config.master_seed, stream::dynamics));
  TypeAssignment types = init_types(net.node_count(), config.rebel_ratio, types_rng);
  ActionProfile initial = init_profile(net.node_count(), actions_rng);
  return run_dynamics(net, std::move(types), std::move(initial), config.update_probability,
                      config.max_steps, dynamics_rng, config.record_trajectory,
                      config.snapshot_stride);
}

void write_trajectory_csv(std::ostream& out, const RunRecord& record) {
  out << "step,cooperation_degree,avg_satisfaction,complete_ratio,flipped_count\n";
  for (std::size_t t = 0; t < record.trajectory.size(); ++t) {
    const auto& point = record.trajectory[t];
    out << t << "," << IndexFormat::number(point.indices.cooperation_degree) << ","
        << IndexFormat::number(point.indices.average_satisfaction) << ","
        << IndexFormat::number(point.indices.complete_ratio) << "," << point.flipped << "\n";
  }
}

}  // namespace fashion
