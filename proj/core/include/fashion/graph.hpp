#pragma once

#include <cstdint>

#include "fashion/network.hpp"
#include "fashion/rng.hpp"

namespace fashion {

/// Grid geometry of a toroidal lattice. Node id = row * cols + col.
/// make_torus requires rows, cols >= 3; rendering only needs positive dims.
struct TorusSpec {
  std::int32_t rows = 0;
  std::int32_t cols = 0;

  std::int64_t node_count() const {
    return static_cast<std::int64_t>(rows) * cols;
  }
  bool operator==(const TorusSpec&) const = default;
};

/// Moore-neighborhood torus: every cell adjacent to its 8 surrounding cells,
/// with wraparound on both axes. All nodes have degree exactly 8.
Network make_torus(const TorusSpec& spec);

/// Ring lattice: node i adjacent to i+-1 ... i+-k/2 (mod n). k even, 0 < k < n.
Network make_ring_lattice(std::int32_t n, std::int32_t k);

enum class RewireMode {
  /// Kept endpoint is the node that owns the edge in ring construction
  /// (the endpoint the edge leaves in the forward lane direction).
  InitiatorKept,
  /// Kept endpoint drawn uniformly from the two old ones.
  UniformEndpointKept,
};

/// Watts-Strogatz style rewiring. Each original edge is independently
/// selected with probability q; a selected edge (u,v) is replaced by (w,t)
/// with w the kept endpoint and t uniform over nodes that are neither w nor
/// currently adjacent to w. If w is adjacent to everyone the edge is left
/// untouched. Edges are visited in a canonical order (by lane then
/// (min,max) id for InitiatorKept, by (min,max) id otherwise) against the
/// mutating graph state, so the result is a pure function of
/// (network, q, seed) on every platform. Edge count is always preserved.
Network rewire(const Network& net, double q, RewireMode mode, Rng& rng);

/// Watts-Strogatz small-world network: ring lattice + InitiatorKept rewiring.
Network make_small_world(std::int32_t n, std::int32_t k, double q, Rng& rng);

/// Small-world variant benchmarked on the torus instead of a ring; the torus
/// has no edge ownership, so the kept endpoint is drawn uniformly.
Network make_modified_small_world(const TorusSpec& spec, double q, Rng& rng);

}  // namespace fashion
