#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cycleforge {

using Vertex = std::int32_t;

struct Edge {
  Vertex a;
  Vertex b;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1. Adjacency lists are strictly
// ascending and symmetric. Instances are immutable; every transformation
// returns a new graph.
class Graph {
 public:
  Graph() = default;

  // Rejects out-of-range endpoints, self-loops and repeated pairs (in either
  // orientation). Pairs need not be given with a < b.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  bool adjacent(Vertex a, Vertex b) const;

  // Edges (a, b) with a < b in lexicographic order.
  EdgeList edges() const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct VertexDeletion {
  Graph graph;
  // old index -> new index, or -1 for the deleted vertex
  std::vector<Vertex> remap;
};

VertexDeletion delete_vertex(const Graph& g, Vertex v);

// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Graph on the same vertex set with the given extra edges.
Graph add_edges(const Graph& g, std::span<const Edge> extra);

bool is_cubic(const Graph& g);
bool all_degrees_odd(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

// Subgraph induced by `keep` (ascending, distinct), vertices renumbered in order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Named small graphs used throughout the tests and the CLI.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t p, std::size_t q);

}  // namespace cycleforge
