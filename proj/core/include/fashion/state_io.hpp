#pragma once

#include <iosfwd>
#include <optional>

#include "fashion/game.hpp"
#include "fashion/graph.hpp"

namespace fashion {

/// A dumped configuration: per-agent types and actions, plus grid dims when
/// the run had torus geometry (needed to re-render or compute street stats).
struct GameState {
  std::optional<TorusSpec> grid;
  TypeAssignment types;
  ActionProfile actions;
};

/// Text format:
///   # fashion state
///   nodes 6
///   rows 2        (only with grid geometry)
///   cols 3
///   types CRRCCR
///   actions 010011
void write_state(std::ostream& out, const GameState& state);
GameState read_state(std::istream& in);

}  // namespace fashion
