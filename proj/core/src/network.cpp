#include "fashion/network.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fashion/errors.hpp"

namespace fashion {

Network Network::from_adjacency(const std::vector<std::vector<std::int32_t>>& adj) {
  const auto n = static_cast<std::int32_t>(adj.size());
  Network net;
  net.offsets_.reserve(adj.size() + 1);
  for (std::int32_t i = 0; i < n; ++i) {
    const auto& row = adj[i];
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::int32_t j = row[k];
      if (j < 0 || j >= n)
        throw ParameterError("adjacency entry out of range: node " + std::to_string(i));
      if (j == i) throw ParameterError("self-loop at node " + std::to_string(i));
      if (k > 0 && row[k - 1] >= j)
        throw ParameterError("adjacency list not sorted-unique at node " + std::to_string(i));
    }
    net.flat_.insert(net.flat_.end(), row.begin(), row.end());
    net.offsets_.push_back(static_cast<std::int64_t>(net.flat_.size()));
  }
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j : net.neighbors(i))
      if (!net.has_edge(j, i))
        throw ParameterError("asymmetric edge " + std::to_string(i) + "-" + std::to_string(j));
  return net;
}

bool Network::has_edge(std::int32_t u, std::int32_t v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<std::int32_t, std::int32_t>> Network::edges() const {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (std::int32_t i = 0; i < node_count(); ++i)
    for (std::int32_t j : neighbors(i))
      if (i < j) out.emplace_back(i, j);
  return out;
}

void write_edge_list(std::ostream& out, const Network& net) {
  out << "# nodes=" << net.node_count() << "\n";
  for (auto [u, v] : net.edges()) out << u << " " << v << "\n";
}

Network read_edge_list(std::istream& in) {
  std::string line;
  std::int64_t n = -1;
  // header: "# nodes=N"
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto pos = line.find("nodes=");
    if (line[0] != '#' || pos == std::string::npos)
      throw ParameterError("edge list must start with '# nodes=N' header");
    n = std::stoll(line.substr(pos + 6));
    break;
  }
  if (n < 0) throw ParameterError("edge list missing '# nodes=N' header");
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n));
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::int64_t u, v;
    if (!(row >> u >> v)) throw ParameterError("malformed edge line: " + line);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParameterError("edge endpoint out of range: " + line);
    adj[static_cast<std::size_t>(u)].push_back(static_cast<std::int32_t>(v));
    adj[static_cast<std::size_t>(v)].push_back(static_cast<std::int32_t>(u));
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return Network::from_adjacency(adj);
}

}  // namespace fashion
