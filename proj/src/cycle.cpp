#include "cycleforge/cycle.hpp"

#include <algorithm>
#include <sstream>

#include "cycleforge/error.hpp"

namespace cycleforge {

CycleWitness canonical_cycle(const CycleWitness& cycle) {
  if (cycle.size() < 3) return cycle;
  const std::size_t m = cycle.size();
  const auto start = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  CycleWitness out(m);
  const bool forward = cycle[(start + 1) % m] < cycle[(start + m - 1) % m];
  for (std::size_t k = 0; k < m; ++k) {
    out[k] = forward ? cycle[(start + k) % m] : cycle[(start + m - k) % m];
  }
  return out;
}

bool is_simple_cycle(const Graph& g, const CycleWitness& cycle) {
  if (cycle.size() < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : cycle) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (!g.adjacent(cycle[k], cycle[(k + 1) % cycle.size()])) return false;
  }
  return true;
}

std::string format_cycle(const CycleWitness& cycle) {
  std::ostringstream out;
  for (std::size_t k = 0; k < cycle.size(); ++k) out << (k ? " " : "") << cycle[k];
  return out.str();
}

CycleWitness parse_cycle(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  CycleWitness cycle;
  long long v = 0;
  while (in >> v) cycle.push_back(static_cast<Vertex>(v));
  if (!in.eof()) throw Error(ErrorCode::MalformedInput, "cycle must be a list of vertex indices");
  return cycle;
}

}  // namespace cycleforge
