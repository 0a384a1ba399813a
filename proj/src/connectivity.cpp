#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "cycleforge/analysis.hpp"
#include "cycleforge/error.hpp"

namespace cycleforge {

namespace {

// Network with every vertex v split into in(v) = 2v and out(v) = 2v + 1
// joined by an arc of capacity one. Each edge ab becomes the uncuttable arcs
// out(a) -> in(b) and out(b) -> in(a), so every minimum cut is a vertex set.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : nodes_(2 * g.order()), head_(nodes_ + 1, 0) {
    const auto unbounded = static_cast<std::uint32_t>(g.order() + 1);
    std::vector<std::tuple<int, int, std::uint32_t>> arcs;
    arcs.reserve(g.order() + 2 * g.size());
    for (std::size_t v = 0; v < g.order(); ++v) arcs.emplace_back(in(v), out(v), 1);
    for (const Edge& e : g.edges()) {
      arcs.emplace_back(out(e.a), in(e.b), unbounded);
      arcs.emplace_back(out(e.b), in(e.a), unbounded);
    }
    // CSR with each arc stored next to a residual twin.
    for (auto [from, to, c] : arcs) {
      ++head_[static_cast<std::size_t>(from) + 1];
      ++head_[static_cast<std::size_t>(to) + 1];
    }
    for (std::size_t k = 0; k < nodes_; ++k) head_[k + 1] += head_[k];
    to_.resize(head_[nodes_]);
    twin_.resize(head_[nodes_]);
    base_cap_.resize(head_[nodes_]);
    std::vector<std::size_t> fill(head_.begin(), head_.end() - 1);
    for (auto [from, to, c] : arcs) {
      std::size_t a = fill[static_cast<std::size_t>(from)]++;
      std::size_t b = fill[static_cast<std::size_t>(to)]++;
      to_[a] = to;
      to_[b] = from;
      twin_[a] = b;
      twin_[b] = a;
      base_cap_[a] = c;
      base_cap_[b] = 0;
    }
    cap_ = base_cap_;
    pred_.assign(nodes_, kNone);
  }

  static int in(std::size_t v) { return static_cast<int>(2 * v); }
  static int out(std::size_t v) { return static_cast<int>(2 * v + 1); }

  // Max flow from out(s) to in(t), stopping once `cap` units are routed.
  std::size_t flow(Vertex s, Vertex t, std::size_t cap) {
    cap_ = base_cap_;
    const int source = out(static_cast<std::size_t>(s));
    const int sink = in(static_cast<std::size_t>(t));
    std::size_t total = 0;
    while (total < cap && augment(source, sink)) ++total;
    last_source_ = source;
    return total;
  }

  // Vertices whose split arc crosses from the source side of the last flow's
  // residual graph to the sink side.
  std::vector<Vertex> last_cut() {
    reachable(last_source_, -1);
    std::vector<Vertex> cut;
    for (std::size_t v = 0; v < nodes_ / 2; ++v) {
      if (pred_[static_cast<std::size_t>(in(v))] != kNone && pred_[static_cast<std::size_t>(out(v))] == kNone) {
        cut.push_back(static_cast<Vertex>(v));
      }
    }
    return cut;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // BFS over residual arcs; pred_ holds the arc used to reach each node.
  bool reachable(int source, int sink) {
    std::fill(pred_.begin(), pred_.end(), kNone);
    queue_.clear();
    queue_.push_back(source);
    pred_[static_cast<std::size_t>(source)] = head_[nodes_];
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      int x = queue_[h];
      for (std::size_t a = head_[static_cast<std::size_t>(x)]; a < head_[static_cast<std::size_t>(x) + 1]; ++a) {
        int y = to_[a];
        if (cap_[a] == 0 || pred_[static_cast<std::size_t>(y)] != kNone) continue;
        pred_[static_cast<std::size_t>(y)] = a;
        if (y == sink) return true;
        queue_.push_back(y);
      }
    }
    return false;
  }

  bool augment(int source, int sink) {
    if (!reachable(source, sink)) return false;
    for (int y = sink; y != source;) {
      std::size_t a = pred_[static_cast<std::size_t>(y)];
      --cap_[a];
      ++cap_[twin_[a]];
      y = to_[twin_[a]];
    }
    return true;
  }

  std::size_t nodes_;
  std::vector<std::size_t> head_;
  std::vector<int> to_;
  std::vector<std::size_t> twin_;
  std::vector<std::uint32_t> base_cap_;
  std::vector<std::uint32_t> cap_;
  std::vector<std::size_t> pred_;
  std::vector<int> queue_;
  int last_source_ = 0;
};

Vertex min_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (std::size_t v = 1; v < g.order(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) < g.degree(best)) best = static_cast<Vertex>(v);
  }
  return best;
}

}  // namespace

std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  const auto n = static_cast<Vertex>(g.order());
  if (s < 0 || t < 0 || s >= n || t >= n) throw Error(ErrorCode::IndexOutOfRange, "flow endpoint");
  if (s == t || g.adjacent(s, t)) {
    throw Error(ErrorCode::InvalidParameters, "local connectivity needs distinct non-adjacent vertices");
  }
  SplitNetwork net(g);
  return net.flow(s, t, cap);
}

ConnectivityResult vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1 || !is_connected(g)) return {0, {}};
  if (is_complete(g)) return {n - 1, {}};

  // N(v) separates v from any non-neighbour, so kappa <= min degree.
  const Vertex v0 = min_degree_vertex(g);
  ConnectivityResult best{g.degree(v0), {}};
  auto nb = g.neighbors(v0);
  best.cut.assign(nb.begin(), nb.end());

  // Some vertex among the first kappa + 1 lies outside a minimum cut, and a
  // vertex with a larger index lies on the other side of it.
  SplitNetwork net(g);
  for (std::size_t i = 0; i <= best.kappa && i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto s = static_cast<Vertex>(i);
      auto t = static_cast<Vertex>(j);
      if (g.adjacent(s, t)) continue;
      std::size_t f = net.flow(s, t, best.kappa);
      if (f < best.kappa) {
        best.kappa = f;
        best.cut = net.last_cut();
      }
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  const std::size_t n = g.order();
  if (n <= k || !is_connected(g)) return false;
  if (is_complete(g)) return true;
  if (g.min_degree() < k) return false;
  SplitNetwork net(g);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto s = static_cast<Vertex>(i);
      auto t = static_cast<Vertex>(j);
      if (!g.adjacent(s, t) && net.flow(s, t, k) < k) return false;
    }
  }
  return true;
}

}  // namespace cycleforge
