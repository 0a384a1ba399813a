#include <string>

#include "cycleforge/cycle_search.hpp"
#include "cycleforge/error.hpp"

namespace cycleforge {

namespace {

void require_odd_degrees(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) % 2 == 0) {
      throw Error(ErrorCode::EvenDegreePresent, "vertex " + std::to_string(v) + " has even degree");
    }
  }
}

}  // namespace

SmithCheck smith_edge_check(const Graph& g, const SearchConfig& config) {
  require_odd_degrees(g);
  SmithCheck check;
  check.incidence = hamiltonian_edge_incidence(g, config);
  check.all_even = true;
  for (auto c : check.incidence.count) {
    if (c % 2 != 0) check.all_even = false;
  }
  if (is_cubic(g) && check.incidence.total > 0) check.three_cycle_corollary = check.incidence.total >= 3;
  return check;
}

ParityCheck thomason_parity_check(const Graph& g, const SearchConfig& config) {
  require_odd_degrees(g);
  ParityCheck check;
  check.cycles = count_hamiltonian_cycles(g, config).count;
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto minus = delete_vertex(g, static_cast<Vertex>(v));
    std::uint64_t c = count_hamiltonian_cycles(minus.graph, config).count;
    check.cycles_without.push_back(c);
    if ((c & 1) != (check.cycles & 1)) check.failures.push_back(static_cast<Vertex>(v));
  }
  return check;
}

UniqueCycleCheck unique_cycle_nonhamiltonicity_check(const Graph& g, const SearchConfig& config) {
  if (!is_cubic(g)) throw Error(ErrorCode::NotCubic, "unique-longest-cycle check needs a cubic graph");
  UniqueCycleCheck check;
  check.census = longest_cycle_census(g, config);
  check.applicable = check.census.count == 1;
  check.passed = !check.applicable || check.census.circumference + 2 <= g.order();
  return check;
}

}  // namespace cycleforge
