#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cycleforge/constructors.hpp"
#include "cycleforge/cycle.hpp"
#include "cycleforge/graph.hpp"

namespace cycleforge {

struct GirthResult {
  // Empty for forests.
  std::optional<std::size_t> girth;
  CycleWitness witness;

  bool acyclic() const noexcept { return !girth.has_value(); }
};

// Shortest cycle via BFS from every vertex. The witness is the
// lexicographically smallest canonical shortest cycle found.
GirthResult girth(const Graph& g, unsigned threads = 1);

struct ConnectivityResult {
  std::size_t kappa = 0;
  // Empty for complete and for disconnected graphs.
  std::vector<Vertex> cut;
};

// Menger: minimum over non-adjacent pairs of the number of internally
// vertex-disjoint paths, via unit-capacity max-flow on the vertex-split
// network. kappa(K_n) = n - 1.
ConnectivityResult vertex_connectivity(const Graph& g);

// Same test as vertex_connectivity(g).kappa >= k, but each flow stops after
// k augmentations.
bool is_k_connected(const Graph& g, std::size_t k);

// Number of internally vertex-disjoint s-t paths for non-adjacent s, t,
// capped at `cap`.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap);

struct InternalCycle {
  Vertex host;
  CycleWitness cycle;  // guest indices, in traversal order
};

struct FiberPath {
  Vertex host;
  std::vector<Vertex> path;  // guest indices, in traversal order
};

struct HostCycle {
  CycleWitness cycle;  // host indices
  std::vector<FiberPath> fibers;
};

using Projection = std::variant<InternalCycle, HostCycle>;

// Collapses a cycle of a married graph onto the host. Throws InvalidCycle if
// `cycle` is not a simple cycle of h, OriginMismatch if the origin does not
// cover h.
Projection project_cycle(const Graph& h, const VertexOrigin& origin, const CycleWitness& cycle);

}  // namespace cycleforge
