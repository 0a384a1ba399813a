#include "cycleforge/constructors.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cycleforge/error.hpp"

namespace cycleforge {

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw Error(ErrorCode::InvalidParameters,
                "GP(" + std::to_string(n) + "," + std::to_string(k) + ") needs n >= 3 and 1 <= k < n/2");
  }
  EdgeList edges;
  edges.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto outer = static_cast<Vertex>(i);
    auto inner = static_cast<Vertex>(n + i);
    edges.push_back({outer, static_cast<Vertex>((i + 1) % n)});
    edges.push_back({outer, inner});
    edges.push_back({inner, static_cast<Vertex>(n + (i + k) % n)});
  }
  return Graph(2 * n, edges);
}

Graph k4() { return complete_graph(4); }

Graph petersen() { return generalized_petersen(5, 2); }

namespace {

// One half of the Fig. 1 drawing, 28 vertices, positions p = 0..4 around a
// pentagon. Local numbering:
//   inner apex  p        inner left  5 + p     inner right 10 + p
//   outer apex  15 + p   (15 is the lone apex at position 0)
//   outer left  20 + p-1 outer right 24 + p-1  (positions 1..4 only)
struct HalfLayout {
  static constexpr Vertex inner_apex(int p) { return p; }
  static constexpr Vertex inner_left(int p) { return 5 + p; }
  static constexpr Vertex inner_right(int p) { return 10 + p; }
  static constexpr Vertex outer_apex(int p) { return 15 + p; }
  static constexpr Vertex outer_left(int p) { return 20 + p - 1; }
  static constexpr Vertex outer_right(int p) { return 24 + p - 1; }
  static constexpr Vertex kOrder = 28;
  // The two degree-2 vertices left for the cross-half edges.
  static constexpr Vertex kPortA = 24 + 1;  // outer right at position 2
  static constexpr Vertex kPortB = 20 + 2;  // outer left at position 3
};

void add_half(EdgeList& edges, Vertex offset) {
  using L = HalfLayout;
  auto add = [&](Vertex a, Vertex b) { edges.push_back({offset + a, offset + b}); };
  for (int p = 0; p < 5; ++p) {
    add(L::inner_apex(p), L::inner_left(p));
    add(L::inner_apex(p), L::inner_right(p));
    add(L::inner_left(p), L::inner_right(p));
    add(L::inner_left((p + 2) % 5), L::inner_right(p));
    add(L::inner_apex(p), L::outer_apex(p));
  }
  for (int p = 1; p < 5; ++p) {
    add(L::outer_apex(p), L::outer_left(p));
    add(L::outer_apex(p), L::outer_right(p));
    add(L::outer_left(p), L::outer_right(p));
  }
  add(L::outer_left(2), L::outer_right(1));
  add(L::outer_left(4), L::outer_right(3));
  add(L::outer_apex(0), L::outer_right(4));
  add(L::outer_apex(0), L::outer_left(1));
}

}  // namespace

Graph chia_thomassen() {
  using L = HalfLayout;
  EdgeList edges;
  add_half(edges, 0);
  add_half(edges, L::kOrder);
  edges.push_back({L::kPortB, L::kOrder + L::kPortA});
  edges.push_back({L::kPortA, L::kOrder + L::kPortB});
  return Graph(2 * L::kOrder, edges);
}

void validate_origin(const VertexOrigin& origin, std::size_t graph_order) {
  if (origin.order() != graph_order) {
    throw Error(ErrorCode::OriginMismatch, "origin covers " + std::to_string(origin.order()) +
                                               " vertices, graph has " + std::to_string(graph_order));
  }
  std::vector<char> seen;
  const std::size_t slots = origin.host_order * (origin.fiber_order + 1);
  seen.assign(slots, 0);
  for (const OriginEntry& e : origin.entries) {
    if (e.host < 0 || static_cast<std::size_t>(e.host) >= origin.host_order || e.guest < kNoGuest ||
        (e.guest != kNoGuest && static_cast<std::size_t>(e.guest) >= origin.fiber_order)) {
      throw Error(ErrorCode::OriginMismatch, "origin entry out of range");
    }
    std::size_t slot = static_cast<std::size_t>(e.host) * (origin.fiber_order + 1) +
                       static_cast<std::size_t>(e.guest + 1);
    if (seen[slot]) throw Error(ErrorCode::OriginMismatch, "origin map is not injective");
    seen[slot] = 1;
  }
}

std::array<std::uint8_t, 3> bijection_permutation(std::size_t index) {
  static constexpr std::array<std::array<std::uint8_t, 3>, kBijectionCount> kPermutations{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  if (index >= kBijectionCount) {
    throw Error(ErrorCode::InvalidParameters, "bijection index " + std::to_string(index) + " not in 0..5");
  }
  return kPermutations[index];
}

std::uint8_t BijectionPolicy::for_vertex(Vertex host) const {
  if (per_vertex.empty()) return index;
  return per_vertex.at(static_cast<std::size_t>(host));
}

namespace {

std::array<Vertex, 3> three_neighbors(const Graph& g, Vertex v, const char* role) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
    throw Error(ErrorCode::IndexOutOfRange, std::string(role) + " vertex " + std::to_string(v));
  }
  if (g.degree(v) != 3) {
    throw Error(ErrorCode::DegreeMismatch,
                std::string(role) + " vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  }
  auto nb = g.neighbors(v);
  return {nb[0], nb[1], nb[2]};
}

}  // namespace

MarriagePlan make_marriage_plan(const Graph& host, Vertex host_vertex, const Graph& guest, Vertex guest_vertex,
                                std::uint8_t bijection) {
  MarriagePlan plan;
  plan.host_neighbors = three_neighbors(host, host_vertex, "host");
  plan.guest_neighbors = three_neighbors(guest, guest_vertex, "guest");
  bijection_permutation(bijection);
  plan.host = host;
  plan.host_vertex = host_vertex;
  plan.guest = guest;
  plan.guest_vertex = guest_vertex;
  plan.bijection = bijection;
  return plan;
}

Married marry(const MarriagePlan& plan) {
  // Re-check in case the plan was assembled by hand.
  auto host_nb = three_neighbors(plan.host, plan.host_vertex, "host");
  auto guest_nb = three_neighbors(plan.guest, plan.guest_vertex, "guest");
  if (host_nb != plan.host_neighbors || guest_nb != plan.guest_neighbors) {
    throw Error(ErrorCode::InvalidParameters, "marriage plan neighbours do not match the graphs");
  }
  auto perm = bijection_permutation(plan.bijection);

  auto host_rest = delete_vertex(plan.host, plan.host_vertex);
  auto guest_rest = delete_vertex(plan.guest, plan.guest_vertex);
  const auto shift = static_cast<Vertex>(host_rest.graph.order());

  EdgeList matching;
  for (std::size_t k = 0; k < 3; ++k) {
    Vertex h = host_rest.remap[static_cast<std::size_t>(host_nb[k])];
    Vertex g = guest_rest.remap[static_cast<std::size_t>(guest_nb[perm[k]])] + shift;
    matching.push_back({h, g});
  }

  Married out{add_edges(disjoint_union(host_rest.graph, guest_rest.graph), matching), {}};
  out.origin.host_order = plan.host.order();
  out.origin.fiber_order = guest_rest.graph.order();
  out.origin.entries.reserve(out.graph.order());
  for (std::size_t v = 0; v < plan.host.order(); ++v) {
    if (static_cast<Vertex>(v) != plan.host_vertex) out.origin.entries.push_back({static_cast<Vertex>(v), kNoGuest});
  }
  for (std::size_t j = 0; j < guest_rest.graph.order(); ++j) {
    out.origin.entries.push_back({plan.host_vertex, static_cast<Vertex>(j)});
  }
  return out;
}

Married marry_all(const Graph& host, const Graph& guest, Vertex guest_vertex, const BijectionPolicy& policy) {
  if (!is_cubic(host)) throw Error(ErrorCode::NotCubic, "marry_all needs a cubic host");
  auto guest_nb = three_neighbors(guest, guest_vertex, "guest");
  if (!policy.per_vertex.empty() && policy.per_vertex.size() != host.order()) {
    throw Error(ErrorCode::InvalidParameters, "per-vertex bijection list has the wrong length");
  }

  auto fiber = delete_vertex(guest, guest_vertex);
  const std::size_t f = fiber.graph.order();
  std::array<Vertex, 3> ports{};
  for (std::size_t k = 0; k < 3; ++k) ports[k] = fiber.remap[static_cast<std::size_t>(guest_nb[k])];

  const EdgeList fiber_edges = fiber.graph.edges();
  EdgeList edges;
  edges.reserve(host.order() * fiber_edges.size() + host.size());
  for (std::size_t i = 0; i < host.order(); ++i) {
    const auto base = static_cast<Vertex>(i * f);
    for (const Edge& e : fiber_edges) edges.push_back({base + e.a, base + e.b});
  }

  // Fiber port in copy `at` that receives the host edge towards `toward`.
  auto port = [&](Vertex at, Vertex toward) {
    auto nb = host.neighbors(at);
    auto k = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), toward) - nb.begin());
    auto perm = bijection_permutation(policy.for_vertex(at));
    return static_cast<Vertex>(static_cast<std::size_t>(at) * f) + ports[perm[k]];
  };
  for (const Edge& e : host.edges()) edges.push_back({port(e.a, e.b), port(e.b, e.a)});

  Married out{Graph(host.order() * f, edges), {}};
  out.origin.host_order = host.order();
  out.origin.fiber_order = f;
  out.origin.entries.reserve(host.order() * f);
  for (std::size_t i = 0; i < host.order(); ++i) {
    for (std::size_t j = 0; j < f; ++j) out.origin.entries.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return out;
}

std::size_t family_order(std::size_t level) {
  std::size_t order = 56;
  for (std::size_t k = 0; k < level; ++k) {
    if (order > std::numeric_limits<std::size_t>::max() / 17) return std::numeric_limits<std::size_t>::max();
    order *= 17;
  }
  return order;
}

FamilyMember family_member(std::size_t level, const FamilyConfig& config) {
  const std::size_t order = family_order(level);
  if (order > config.max_order) {
    throw Error(ErrorCode::ResourceLimit, "family member " + std::to_string(level) + " would have " +
                                              std::to_string(order) + " vertices, cap is " +
                                              std::to_string(config.max_order));
  }
  const Graph guest = generalized_petersen(9, 2);
  FamilyMember member{chia_thomassen(), {}};
  for (std::size_t k = 0; k < level; ++k) {
    auto married = marry_all(member.graph, guest, config.guest_vertex, BijectionPolicy::fixed(config.bijection));
    member.graph = std::move(married.graph);
    member.origins.push_back(std::move(married.origin));
  }
  return member;
}

}  // namespace cycleforge
