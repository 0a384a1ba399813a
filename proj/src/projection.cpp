#include <algorithm>
#include <string>

#include "cycleforge/analysis.hpp"
#include "cycleforge/error.hpp"

namespace cycleforge {

Projection project_cycle(const Graph& h, const VertexOrigin& origin, const CycleWitness& cycle) {
  validate_origin(origin, h.order());
  if (!is_simple_cycle(h, cycle)) throw Error(ErrorCode::InvalidCycle, "not a simple cycle of the graph");

  const std::size_t m = cycle.size();
  auto host_at = [&](std::size_t k) { return origin[cycle[k % m]].host; };

  std::size_t first_cross = m;
  for (std::size_t k = 0; k < m; ++k) {
    if (host_at(k) != host_at(k + 1)) {
      first_cross = k;
      break;
    }
  }
  if (first_cross == m) {
    InternalCycle internal{host_at(0), {}};
    for (Vertex v : cycle) internal.cycle.push_back(origin[v].guest);
    return internal;
  }

  // Walk once around from the first vertex after a host change, opening a
  // new fiber path whenever the host index changes.
  HostCycle result;
  for (std::size_t step = 0; step < m; ++step) {
    Vertex v = cycle[(first_cross + 1 + step) % m];
    const OriginEntry& e = origin[v];
    if (result.fibers.empty() || result.fibers.back().host != e.host) {
      result.cycle.push_back(e.host);
      result.fibers.push_back({e.host, {}});
    }
    result.fibers.back().path.push_back(e.guest);
  }

  auto sorted = result.cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || result.cycle.size() < 3) {
    throw Error(ErrorCode::OriginMismatch, "cycle enters a fiber twice; origin does not describe a marriage");
  }
  return result;
}

}  // namespace cycleforge
