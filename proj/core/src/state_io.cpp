#include "fashion/state_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fashion/errors.hpp"

namespace fashion {

void write_state(std::ostream& out, const GameState& state) {
  if (state.types.size() != state.actions.size())
    throw ParameterError("state types/actions lengths differ");
  out << "# fashion state\n";
  out << "nodes " << state.types.size() << "\n";
  if (state.grid) {
    out << "rows " << state.grid->rows << "\n";
    out << "cols " << state.grid->cols << "\n";
  }
  out << "types ";
  for (AgentType t : state.types) out << (t == AgentType::Rebel ? 'R' : 'C');
  out << "\nactions ";
  for (std::uint8_t x : state.actions) out << (x ? '1' : '0');
  out << "\n";
}

GameState read_state(std::istream& in) {
  GameState state;
  std::int64_t nodes = -1;
  std::int32_t rows = 0, cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string key;
    row >> key;
    if (key == "nodes") {
      row >> nodes;
    } else if (key == "rows") {
      row >> rows;
    } else if (key == "cols") {
      row >> cols;
    } else if (key == "types") {
      std::string letters;
      row >> letters;
      for (char c : letters) {
        if (c == 'C')
          state.types.push_back(AgentType::Conformist);
        else if (c == 'R')
          state.types.push_back(AgentType::Rebel);
        else
          throw ParameterError(std::string("bad type letter '") + c + "'");
      }
    } else if (key == "actions") {
      std::string bits;
      row >> bits;
      for (char c : bits) {
        if (c != '0' && c != '1')
          throw ParameterError(std::string("bad action digit '") + c + "'");
        state.actions.push_back(static_cast<std::uint8_t>(c - '0'));
      }
    } else {
      throw ParameterError("unknown state key: " + key);
    }
  }
  if (nodes < 0) throw ParameterError("state file missing 'nodes'");
  if (state.types.size() != static_cast<std::size_t>(nodes) ||
      state.actions.size() != static_cast<std::size_t>(nodes))
    throw ParameterError("state lengths do not match node count");
  if (rows > 0 || cols > 0) {
    if (static_cast<std::int64_t>(rows) * cols != nodes)
      throw ParameterError("state grid dims do not match node count");
    state.grid = TorusSpec{rows, cols};
  }
  return state;
}

}  // namespace fashion
