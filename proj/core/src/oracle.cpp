#include "fashion/oracle.hpp"

#include <algorithm>
#include <string>

#include "fashion/errors.hpp"

namespace fashion {

namespace {

// Depth-first assignment in agent-id order. For an assigned agent m with
// `rem` unassigned neighbors, the best final likes count is likes[m] + rem;
// the branch is dead once 2 * (likes[m] + rem) < deg(m).
class Search {
 public:
  Search(const Network& net, const TypeAssignment& types, bool first_hit_only)
      : net_(net),
        types_(types),
        first_hit_only_(first_hit_only),
        n_(net.node_count()),
        action_(static_cast<std::size_t>(n_), 0),
        likes_(static_cast<std::size_t>(n_), 0),
        assigned_neighbors_(static_cast<std::size_t>(n_), 0) {}

  std::vector<std::uint64_t> run() {
    dfs(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool viable(std::int32_t m) const {
    const std::int32_t rem = net_.degree(m) - assigned_neighbors_[m];
    return 2 * (likes_[m] + rem) >= net_.degree(m);
  }

  bool likes_pair(std::int32_t who, std::int32_t other) const {
    const bool same = action_[who] == action_[other];
    return types_[who] == AgentType::Conformist ? same : !same;
  }

  void dfs(std::int32_t i) {
    if (first_hit_only_ && !found_.empty()) return;
    if (i == n_) {
      std::uint64_t bits = 0;
      for (std::int32_t a = 0; a < n_; ++a)
        bits |= static_cast<std::uint64_t>(action_[a]) << a;
      found_.push_back(bits);
      return;
    }
    for (std::uint8_t v : {std::uint8_t{0}, std::uint8_t{1}}) {
      action_[i] = v;
      bool ok = true;
      std::int32_t undo = 0;  // how many earlier neighbors got updated
      auto nbrs = net_.neighbors(i);
      for (std::int32_t j : nbrs) {
        if (j >= i) continue;
        ++assigned_neighbors_[i];
        ++assigned_neighbors_[j];
        likes_[i] += likes_pair(i, j);
        likes_[j] += likes_pair(j, i);
        ++undo;
        if (!viable(j)) {
          ok = false;
          break;
        }
      }
      if (ok && viable(i)) dfs(i + 1);
      // unwind this assignment
      std::int32_t seen = 0;
      for (std::int32_t j : nbrs) {
        if (j >= i) continue;
        if (seen++ == undo) break;
        --assigned_neighbors_[i];
        --assigned_neighbors_[j];
        likes_[i] -= likes_pair(i, j);
        likes_[j] -= likes_pair(j, i);
      }
    }
  }

  const Network& net_;
  const TypeAssignment& types_;
  const bool first_hit_only_;
  const std::int32_t n_;
  ActionProfile action_;
  std::vector<std::int32_t> likes_;
  std::vector<std::int32_t> assigned_neighbors_;
  std::vector<std::uint64_t> found_;
};

void check_size(const Network& net, const TypeAssignment& types, std::int32_t limit_n) {
  detail::check_instance(net, types, ActionProfile(static_cast<std::size_t>(net.node_count())));
  if (net.node_count() > limit_n)
    throw SizeError("instance has " + std::to_string(net.node_count()) +
                    " agents, exhaustive limit is " + std::to_string(limit_n));
}

}  // namespace

bool EquilibriumSet::contains(std::uint64_t profile) const {
  return std::binary_search(profiles.begin(), profiles.end(), profile);
}

bool EquilibriumSet::contains(const ActionProfile& profile) const {
  return contains(pack_profile(profile));
}

std::uint64_t pack_profile(const ActionProfile& profile) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < profile.size(); ++i)
    bits |= static_cast<std::uint64_t>(profile[i] & 1u) << i;
  return bits;
}

ActionProfile unpack_profile(std::uint64_t bits, std::int32_t n) {
  ActionProfile profile(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i)
    profile[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((bits >> i) & 1u);
  return profile;
}

EquilibriumSet enumerate_equilibria(const Network& net, const TypeAssignment& types,
                                    std::int32_t limit_n) {
  check_size(net, types, limit_n);
  EquilibriumSet set;
  set.n = net.node_count();
  set.profiles = Search(net, types, false).run();
  // global flip symmetry: equilibria come in complement pairs
  const std::uint64_t mask = set.n == 64 ? ~0ull : (1ull << set.n) - 1;
  for (std::uint64_t bits : set.profiles)
    if (!set.contains(~bits & mask))
      throw std::logic_error("equilibrium set not closed under complement");
  return set;
}

bool has_pure_equilibrium(const Network& net, const TypeAssignment& types,
                          std::int32_t limit_n) {
  check_size(net, types, limit_n);
  return !Search(net, types, true).run().empty();
}

bool all_rebel_perfect_exists(const Network& net) {
  const std::int32_t n = net.node_count();
  std::vector<std::int8_t> color(static_cast<std::size_t>(n), -1);
  std::vector<std::int32_t> stack;
  for (std::int32_t start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      std::int32_t u = stack.back();
      stack.pop_back();
      for (std::int32_t v : net.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = static_cast<std::int8_t>(1 - color[u]);
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;  // odd cycle
        }
      }
    }
  }
  return true;
}

}  // namespace fashion
