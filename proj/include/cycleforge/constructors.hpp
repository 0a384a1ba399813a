#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cycleforge/graph.hpp"

namespace cycleforge {

// Outer cycle o_0..o_{n-1} on vertices 0..n-1, inner vertices p_i = n + i,
// spokes o_i p_i and inner edges p_i p_{i+k mod n}.
Graph generalized_petersen(std::size_t n, std::size_t k);
Graph k4();
Graph petersen();

// The 56-vertex cubic 2-connected girth-3 graph with a unique longest cycle
// (two mirrored 28-vertex halves joined by two edges). Vertices 0..27 form
// the first half, 28..55 the second.
Graph chia_thomassen();

inline constexpr Vertex kNoGuest = -1;

struct OriginEntry {
  Vertex host;   // index in the host graph
  Vertex guest;  // index in the guest graph minus the marked vertex, or kNoGuest

  friend bool operator==(const OriginEntry&, const OriginEntry&) = default;
};

// Maps each vertex of a married graph back to (host vertex, guest vertex).
// host_order is |V(G1)|, fiber_order is |V(G2 - u)|.
struct VertexOrigin {
  std::size_t host_order = 0;
  std::size_t fiber_order = 0;
  std::vector<OriginEntry> entries;

  std::size_t order() const noexcept { return entries.size(); }
  const OriginEntry& operator[](Vertex v) const { return entries[static_cast<std::size_t>(v)]; }
  friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

// Throws OriginMismatch when the map is not total and injective on a graph of
// the given order.
void validate_origin(const VertexOrigin& origin, std::size_t graph_order);

// The six ways of pairing the host neighbours (ascending) with the guest
// neighbours (ascending), in lexicographic order of permutations of {0,1,2}.
inline constexpr std::size_t kBijectionCount = 6;
std::array<std::uint8_t, 3> bijection_permutation(std::size_t index);

struct BijectionPolicy {
  // Used for every host vertex unless per_vertex is non-empty.
  std::uint8_t index = 0;
  std::vector<std::uint8_t> per_vertex;

  static BijectionPolicy sorted() { return {}; }
  static BijectionPolicy fixed(std::uint8_t k) { return {k, {}}; }
  std::uint8_t for_vertex(Vertex host) const;
};

struct MarriagePlan {
  Graph host;
  Vertex host_vertex = 0;
  std::array<Vertex, 3> host_neighbors{};
  Graph guest;
  Vertex guest_vertex = 0;
  std::array<Vertex, 3> guest_neighbors{};
  std::uint8_t bijection = 0;
};

// Throws DegreeMismatch unless both marked vertices have degree 3, and
// InvalidParameters for a bijection index outside 0..5.
MarriagePlan make_marriage_plan(const Graph& host, Vertex host_vertex, const Graph& guest,
                                Vertex guest_vertex, std::uint8_t bijection = 0);

struct Married {
  Graph graph;
  VertexOrigin origin;
};

// Result is disjoint_union(host - a, guest - u) plus a three-edge matching.
// Untouched host vertices get guest = kNoGuest.
Married marry(const MarriagePlan& plan);

// Marries every vertex of a cubic host with a copy of (guest, u). Vertex
// (i, j) of the result has index i * (|guest| - 1) + j.
Married marry_all(const Graph& host, const Graph& guest, Vertex guest_vertex,
                  const BijectionPolicy& policy = BijectionPolicy::sorted());

struct FamilyConfig {
  Vertex guest_vertex = 0;
  std::uint8_t bijection = 0;
  std::size_t max_order = std::size_t{1} << 20;
};

struct FamilyMember {
  Graph graph;
  // origins[l] maps level l+1 back onto level l.
  std::vector<VertexOrigin> origins;
};

std::size_t family_order(std::size_t level);  // 56 * 17^level, saturating
FamilyMember family_member(std::size_t level, const FamilyConfig& config = {});

}  // namespace cycleforge
