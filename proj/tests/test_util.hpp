#pragma once

// Shared helpers for the unit suites. The random-instance generator and the
// tiny brute-force checks here are intentionally independent of the library
// code they are used to test.

#include <cstdint>
#include <random>
#include <vector>

#include "fashion/game.hpp"
#include "fashion/network.hpp"

namespace testutil {

inline fashion::Network dyad() {
  return fashion::Network::from_adjacency({{1}, {0}});
}

inline fashion::Network triangle() {
  return fashion::Network::from_adjacency({{1, 2}, {0, 2}, {0, 1}});
}

inline fashion::Network cycle(std::int32_t n) {
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t a = (i + 1) % n, b = (i + n - 1) % n;
    adj[i] = a < b ? std::vector<std::int32_t>{a, b} : std::vector<std::int32_t>{b, a};
  }
  return fashion::Network::from_adjacency(adj);
}

/// Erdos-Renyi G(n, edge_prob) simple graph.
inline fashion::Network random_graph(std::int32_t n, double edge_prob, std::mt19937_64& rng) {
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j = i + 1; j < n; ++j)
      if (unit(rng) < edge_prob) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  return fashion::Network::from_adjacency(adj);
}

inline fashion::TypeAssignment random_types(std::int32_t n, std::mt19937_64& rng) {
  fashion::TypeAssignment types(static_cast<std::size_t>(n));
  for (auto& t : types)
    t = (rng() & 1) ? fashion::AgentType::Rebel : fashion::AgentType::Conformist;
  return types;
}

inline fashion::ActionProfile random_profile(std::int32_t n, std::mt19937_64& rng) {
  fashion::ActionProfile profile(static_cast<std::size_t>(n));
  for (auto& x : profile) x = static_cast<std::uint8_t>(rng() & 1);
  return profile;
}

inline fashion::TypeAssignment uniform_types(std::int32_t n, fashion::AgentType t) {
  return fashion::TypeAssignment(static_cast<std::size_t>(n), t);
}

/// Reference satisfaction check, written from the definition: count each
/// neighbor relation directly.
inline bool reference_satisfied(const fashion::Network& net, const fashion::TypeAssignment& types,
                                const fashion::ActionProfile& x, std::int32_t i) {
  int likes = 0, hates = 0;
  for (std::int32_t j : net.neighbors(i)) {
    bool same = x[j] == x[i];
    bool liked = types[i] == fashion::AgentType::Conformist ? same : !same;
    liked ? ++likes : ++hates;
  }
  return likes - hates >= 0;
}

/// Brute-force equilibrium profiles for n <= ~20, by trying every profile.
inline std::vector<std::uint64_t> reference_equilibria(const fashion::Network& net,
                                                       const fashion::TypeAssignment& types) {
  const std::int32_t n = net.node_count();
  std::vector<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    fashion::ActionProfile x(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((bits >> i) & 1u);
    bool all = true;
    for (std::int32_t i = 0; i < n && all; ++i) all = reference_satisfied(net, types, x, i);
    if (all) out.push_back(bits);
  }
  return out;
}

/// Connected in the plain graph sense (ignores actions).
inline bool connected(const fashion::Network& net) {
  const std::int32_t n = net.node_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::int32_t> stack{0};
  seen[0] = 1;
  std::int32_t reached = 1;
  while (!stack.empty()) {
    std::int32_t u = stack.back();
    stack.pop_back();
    for (std::int32_t v : net.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

}  // namespace testutil
