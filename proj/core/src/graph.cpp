#include "fashion/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fashion/errors.hpp"

namespace fashion {

Network make_torus(const TorusSpec& spec) {
  if (spec.rows < 3)
    throw ParameterError("torus rows must be >= 3, got " + std::to_string(spec.rows));
  if (spec.cols < 3)
    throw ParameterError("torus cols must be >= 3, got " + std::to_string(spec.cols));
  const std::int32_t rows = spec.rows, cols = spec.cols;
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(rows) * cols);
  for (std::int32_t r = 0; r < rows; ++r) {
    for (std::int32_t c = 0; c < cols; ++c) {
      auto& row = adj[static_cast<std::size_t>(r) * cols + c];
      for (std::int32_t dr = -1; dr <= 1; ++dr) {
        for (std::int32_t dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          std::int32_t nr = (r + dr + rows) % rows;
          std::int32_t nc = (c + dc + cols) % cols;
          row.push_back(nr * cols + nc);
        }
      }
      std::sort(row.begin(), row.end());
    }
  }
  return Network::from_adjacency(adj);
}

Network make_ring_lattice(std::int32_t n, std::int32_t k) {
  if (k <= 0 || k % 2 != 0)
    throw ParameterError("ring lattice degree must be positive and even, got " + std::to_string(k));
  if (k >= n)
    throw ParameterError("ring lattice needs k < n, got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n));
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    for (std::int32_t lane = 1; lane <= k / 2; ++lane) {
      std::int32_t j = (i + lane) % n;
      adj[static_cast<std::size_t>(i)].push_back(j);
      adj[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return Network::from_adjacency(adj);
}

namespace {

struct CanonicalEdge {
  std::int32_t owner;  // kept endpoint in InitiatorKept mode
  std::int32_t other;
};

// Ring ownership: edge {u,v} belongs to the endpoint it leaves forward,
// i.e. owner x with (x + lane) mod n == other for the shorter direction.
std::vector<CanonicalEdge> canonical_edges(const Network& net, RewireMode mode) {
  const std::int32_t n = net.node_count();
  std::vector<CanonicalEdge> out;
  out.reserve(static_cast<std::size_t>(net.edge_count()));
  if (mode == RewireMode::UniformEndpointKept) {
    for (auto [u, v] : net.edges()) out.push_back({u, v});
    return out;  // edges() is already sorted by (min, max)
  }
  std::vector<std::tuple<std::int32_t, std::int32_t, std::int32_t, std::int32_t>> keyed;
  for (auto [u, v] : net.edges()) {
    std::int32_t fwd = (v - u + n) % n;  // steps from u to v going forward
    std::int32_t bwd = n - fwd;
    if (fwd == bwd)
      throw ParameterError("initiator-kept rewiring needs unambiguous ring edges");
    std::int32_t lane = std::min(fwd, bwd);
    std::int32_t owner = fwd < bwd ? u : v;
    keyed.emplace_back(lane, u, v, owner);
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [lane, u, v, owner] : keyed)
    out.push_back({owner, owner == u ? v : u});
  return out;
}

}  // namespace

Network rewire(const Network& net, double q, RewireMode mode, Rng& rng) {
  if (q < 0.0 || q > 1.0)
    throw ParameterError("rewiring probability must be in [0,1], got " + std::to_string(q));
  const std::int32_t n = net.node_count();
  const auto plan = canonical_edges(net, mode);

  std::vector<std::set<std::int32_t>> adj(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j : net.neighbors(i)) adj[static_cast<std::size_t>(i)].insert(j);

  for (const auto& edge : plan) {
    if (!rng.bernoulli(q)) continue;
    std::int32_t kept = edge.owner;
    std::int32_t dropped = edge.other;
    if (mode == RewireMode::UniformEndpointKept && rng.next_below(2) == 1)
      std::swap(kept, dropped);
    // saturated endpoint: no target available, leave the edge alone
    if (static_cast<std::int32_t>(adj[static_cast<std::size_t>(kept)].size()) >= n - 1) continue;
    std::int32_t target;
    do {
      target = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(n)));
    } while (target == kept || adj[static_cast<std::size_t>(kept)].count(target) > 0);
    adj[static_cast<std::size_t>(kept)].erase(dropped);
    adj[static_cast<std::size_t>(dropped)].erase(kept);
    adj[static_cast<std::size_t>(kept)].insert(target);
    adj[static_cast<std::size_t>(target)].insert(kept);
  }

  std::vector<std::vector<std::int32_t>> rows(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)].assign(adj[static_cast<std::size_t>(i)].begin(),
                                             adj[static_cast<std::size_t>(i)].end());
  return Network::from_adjacency(rows);
}

Network make_small_world(std::int32_t n, std::int32_t k, double q, Rng& rng) {
  Network ring = make_ring_lattice(n, k);
  return rewire(ring, q, RewireMode::InitiatorKept, rng);
}

Network make_modified_small_world(const TorusSpec& spec, double q, Rng& rng) {
  Network torus = make_torus(spec);
  return rewire(torus, q, RewireMode::UniformEndpointKept, rng);
}

}  // namespace fashion
