#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace fashion {

/// Immutable undirected simple graph in CSR layout. Node ids are 0..n-1,
/// per-node neighbor lists are sorted. Construction validates symmetry,
/// absence of self-loops and duplicates; afterwards the structure is
/// read-only and safe to share across threads.
class Network {
 public:
  Network() = default;

  /// Throws ParameterError if adj is not a simple symmetric graph.
  static Network from_adjacency(const std::vector<std::vector<std::int32_t>>& adj);

  std::int32_t node_count() const { return static_cast<std::int32_t>(offsets_.size()) - 1; }

  std::span<const std::int32_t> neighbors(std::int32_t i) const {
    return {flat_.data() + offsets_[i], flat_.data() + offsets_[i + 1]};
  }

  std::int32_t degree(std::int32_t i) const { return offsets_[i + 1] - offsets_[i]; }

  bool has_edge(std::int32_t u, std::int32_t v) const;

  std::int64_t edge_count() const { return static_cast<std::int64_t>(flat_.size()) / 2; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<std::int32_t, std::int32_t>> edges() const;

  bool operator==(const Network& other) const = default;

 private:
  std::vector<std::int64_t> offsets_{0};
  std::vector<std::int32_t> flat_;
};

/// Edge-list text format: header "# nodes=N", then one "u v" line per edge.
void write_edge_list(std::ostream& out, const Network& net);
Network read_edge_list(std::istream& in);

}  // namespace fashion
