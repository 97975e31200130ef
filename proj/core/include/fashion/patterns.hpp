#pragma once

#include <cstdint>
#include <vector>

#include "fashion/game.hpp"
#include "fashion/graph.hpp"
#include "fashion/network.hpp"

namespace fashion {

/// Partition of the agents into maximal connected same-action regions.
struct ContinentDecomposition {
  std::vector<std::int32_t> continent_of;  // per-agent id, dense from 0
  std::int32_t count = 0;
  std::vector<std::int64_t> sizes;  // descending
};

/// Connected components of the subgraph keeping only equal-action edges.
ContinentDecomposition continents(const Network& net, const ActionProfile& profile);

/// Street agents have exactly 2 of their 8 neighbors on their own action
/// (satisfaction 6/8 for a rebel); corners sit on bends and junctions with
/// 3 or 4 matching neighbors.
struct StreetStatistics {
  double street_fraction = 0.0;
  double corner_fraction = 0.0;
  double mean_satisfaction = 0.0;
};

StreetStatistics street_statistics(const TorusSpec& spec, const TypeAssignment& types,
                                   const ActionProfile& profile);

namespace color {
// fixed so golden-image tests stay stable
inline constexpr std::uint8_t action1[3] = {220, 40, 40};  // red
inline constexpr std::uint8_t action0[3] = {40, 180, 60};  // green
}  // namespace color

/// Binary PPM (P6) of the grid, cell_pixels square pixels per agent.
/// Action-1 cells are red, action-0 cells green; rebels carry a centered
/// half-brightness marker block of side ceil(cell_pixels / 2). Byte-exact
/// for given inputs.
std::vector<std::uint8_t> render(const TorusSpec& spec, const TypeAssignment& types,
                                 const ActionProfile& profile, std::int32_t cell_pixels);

}  // namespace fashion
