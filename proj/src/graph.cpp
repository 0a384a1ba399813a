#include "cycleforge/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <string>

#include "cycleforge/error.hpp"

namespace cycleforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::SameEndpoint: return "SameEndpoint";
    case ErrorCode::AcyclicGraph: return "AcyclicGraph";
    case ErrorCode::EvenDegreePresent: return "EvenDegreePresent";
    case ErrorCode::OriginMismatch: return "OriginMismatch";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::IOFailure: return "IOFailure";
    case ErrorCode::ExpectationFailed: return "ExpectationFailed";
  }
  return "Unknown";
}

namespace {

[[maybe_unused]] bool invariants_hold(const std::vector<std::vector<Vertex>>& adj) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const auto& list = adj[v];
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (k > 0 && list[k - 1] >= list[k]) return false;
      auto w = static_cast<std::size_t>(list[k]);
      if (w == v || w >= adj.size()) return false;
      if (!std::binary_search(adj[w].begin(), adj[w].end(), static_cast<Vertex>(v))) return false;
    }
  }
  return true;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.a) >= n || static_cast<std::size_t>(e.b) >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") on " + std::to_string(n) +
                      " vertices");
    }
    if (e.a == e.b) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(e.a));
    adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
  }
  edge_count_ = edges.size();
  assert(invariants_hold(adjacency_));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= order() || static_cast<std::size_t>(b) >= order()) {
    return false;
  }
  auto list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (std::size_t v = 0; v < order(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (static_cast<std::size_t>(w) > v) out.push_back({static_cast<Vertex>(v), w});
    }
  }
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t best = order() == 0 ? 0 : adjacency_[0].size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  std::vector<Vertex> remap(g.order(), -1);
  Vertex next = 0;
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (static_cast<Vertex>(w) != v) remap[w] = next++;
  }
  EdgeList kept;
  for (const Edge& e : g.edges()) {
    if (e.a != v && e.b != v) kept.push_back({remap[static_cast<std::size_t>(e.a)], remap[static_cast<std::size_t>(e.b)]});
  }
  return {Graph(g.order() - 1, kept), std::move(remap)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.push_back({e.a + shift, e.b + shift});
  return Graph(a.order() + b.order(), edges);
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  EdgeList edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.order(), edges);
}

bool is_cubic(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) != 3) return false;
  }
  return true;
}

bool all_degrees_odd(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) % 2 == 0) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == g.order();
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n == 0 ? 0 : n - 1) / 2;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> remap(g.order(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    Vertex v = keep[k];
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
    }
    remap[static_cast<std::size_t>(v)] = static_cast<Vertex>(k);
  }
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    Vertex a = remap[static_cast<std::size_t>(e.a)];
    Vertex b = remap[static_cast<std::size_t>(e.b)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(keep.size(), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameters, "cycle needs at least 3 vertices");
  EdgeList edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  EdgeList edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  EdgeList edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t p, std::size_t q) {
  EdgeList edges;
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < q; ++b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(p + b)});
  }
  return Graph(p + q, edges);
}

}  // namespace cycleforge
