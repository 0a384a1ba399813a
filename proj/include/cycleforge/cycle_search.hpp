#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cycleforge/cycle.hpp"
#include "cycleforge/graph.hpp"
#include "cycleforge/limits.hpp"

namespace cycleforge {

struct SearchConfig {
  unsigned threads = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
  // 0 means search_vertex_limit().
  std::size_t max_vertices = 0;
  // Disables the residual-reachability bound and dead-end peeling. Results
  // must not change; only the work does.
  bool prune = true;
  std::size_t max_witnesses = 4;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t bound_prunes = 0;
  std::uint64_t probes = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    bound_prunes += o.bound_prunes;
    probes += o.probes;
    return *this;
  }
};

struct CycleCensus {
  std::size_t circumference = 0;
  std::uint64_t count = 0;
  // Canonical witnesses in discovery order (ascending smallest vertex).
  std::vector<CycleWitness> witnesses;
  SearchStats stats;
};

// Two phases: descending probes with an admissible bound find the
// circumference L, then every cycle of length exactly L is counted once.
// Throws AcyclicGraph for forests and ResourceLimit past the vertex or node
// budget.
CycleCensus longest_cycle_census(const Graph& g, const SearchConfig& config = {});

struct HamiltonianCount {
  std::uint64_t count = 0;
  std::vector<CycleWitness> witnesses;
  SearchStats stats;
};

// Hamiltonian cycles up to rotation and reflection.
HamiltonianCount count_hamiltonian_cycles(const Graph& g, const SearchConfig& config = {});

// Hamiltonian s-t paths; each undirected path counted once.
std::uint64_t count_hamiltonian_paths(const Graph& g, Vertex s, Vertex t,
                                      const SearchConfig& config = {});

// Calls visit once per simple cycle, in canonical form, ordered by smallest
// vertex then DFS order. Refuses graphs above enumeration_vertex_limit()
// unless max_vertices is given.
void for_each_cycle(const Graph& g, const std::function<void(const CycleWitness&)>& visit,
                    std::size_t max_vertices = 0);
std::vector<CycleWitness> all_cycles(const Graph& g, std::size_t max_vertices = 0);

struct EdgeHamIncidence {
  EdgeList edges;                  // same order as Graph::edges()
  std::vector<std::uint64_t> count;  // hamiltonian cycles through each edge
  std::uint64_t total = 0;
};

EdgeHamIncidence hamiltonian_edge_incidence(const Graph& g, const SearchConfig& config = {});

struct SmithCheck {
  EdgeHamIncidence incidence;
  bool all_even = false;
  // cubic and hamiltonian implies at least three hamiltonian cycles
  bool three_cycle_corollary = true;
  bool passed() const noexcept { return all_even && three_cycle_corollary; }
};

// Throws EvenDegreePresent unless every degree is odd.
SmithCheck smith_edge_check(const Graph& g, const SearchConfig& config = {});

struct ParityCheck {
  std::uint64_t cycles = 0;
  std::vector<std::uint64_t> cycles_without;  // hc(G - v) for every v
  std::vector<Vertex> failures;
  bool passed() const noexcept { return failures.empty(); }
};

ParityCheck thomason_parity_check(const Graph& g, const SearchConfig& config = {});

struct UniqueCycleCheck {
  CycleCensus census;
  bool applicable = false;  // census count == 1
  bool passed = true;
};

// Throws NotCubic. When the longest cycle is unique, requires L <= n - 2.
UniqueCycleCheck unique_cycle_nonhamiltonicity_check(const Graph& g, const SearchConfig& config = {});

}  // namespace cycleforge
