#include "fashion/patterns.hpp"

#include <algorithm>
#include <string>

#include "fashion/errors.hpp"
#include "fashion/metrics.hpp"

namespace fashion {

ContinentDecomposition continents(const Network& net, const ActionProfile& profile) {
  const std::int32_t n = net.node_count();
  if (profile.size() != static_cast<std::size_t>(n))
    throw ParameterError("profile length does not match network size");
  ContinentDecomposition out;
  out.continent_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::int32_t> stack;
  for (std::int32_t start = 0; start < n; ++start) {
    if (out.continent_of[start] != -1) continue;
    const std::int32_t id = out.count++;
    std::int64_t size = 0;
    out.continent_of[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      std::int32_t u = stack.back();
      stack.pop_back();
      ++size;
      for (std::int32_t v : net.neighbors(u)) {
        if (profile[v] == profile[u] && out.continent_of[v] == -1) {
          out.continent_of[v] = id;
          stack.push_back(v);
        }
      }
    }
    out.sizes.push_back(size);
  }
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  return out;
}

StreetStatistics street_statistics(const TorusSpec& spec, const TypeAssignment& types,
                                   const ActionProfile& profile) {
  const Network net = make_torus(spec);
  detail::check_instance(net, types, profile);
  const std::int32_t n = net.node_count();
  std::int64_t streets = 0, corners = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t same = 0;
    for (std::int32_t j : net.neighbors(i)) same += profile[j] == profile[i];
    streets += same == 2;
    corners += same == 3 || same == 4;
  }
  StreetStatistics stats;
  stats.street_fraction = static_cast<double>(streets) / n;
  stats.corner_fraction = static_cast<double>(corners) / n;
  stats.mean_satisfaction = average_satisfaction(net, types, profile);
  return stats;
}

std::vector<std::uint8_t> render(const TorusSpec& spec, const TypeAssignment& types,
                                 const ActionProfile& profile, std::int32_t cell_pixels) {
  if (cell_pixels < 1)
    throw ParameterError("cell_pixels must be >= 1, got " + std::to_string(cell_pixels));
  if (spec.rows < 1 || spec.cols < 1) throw ParameterError("render needs positive grid dims");
  const auto n = static_cast<std::size_t>(spec.node_count());
  if (types.size() != n || profile.size() != n)
    throw ParameterError("state length does not match grid size");

  const std::int64_t width = static_cast<std::int64_t>(spec.cols) * cell_pixels;
  const std::int64_t height = static_cast<std::int64_t>(spec.rows) * cell_pixels;
  std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  const std::size_t body = bytes.size();
  bytes.resize(body + static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);

  const std::int32_t marker = (cell_pixels + 1) / 2;  // ceil(c/2)
  const std::int32_t offset = (cell_pixels - marker) / 2;
  for (std::int32_t r = 0; r < spec.rows; ++r) {
    for (std::int32_t c = 0; c < spec.cols; ++c) {
      const std::size_t agent = static_cast<std::size_t>(r) * spec.cols + c;
      const std::uint8_t* base = profile[agent] ? color::action1 : color::action0;
      const bool rebel = types[agent] == AgentType::Rebel;
      for (std::int32_t py = 0; py < cell_pixels; ++py) {
        for (std::int32_t px = 0; px < cell_pixels; ++px) {
          const bool marked = rebel && py >= offset && py < offset + marker && px >= offset &&
                              px < offset + marker;
          const std::size_t pixel =
              body + 3 * (static_cast<std::size_t>(r * cell_pixels + py) * width +
                          (c * cell_pixels + px));
          for (int ch = 0; ch < 3; ++ch)
            bytes[pixel + ch] = marked ? base[ch] / 2 : base[ch];
        }
      }
    }
  }
  return bytes;
}

}  // namespace fashion
