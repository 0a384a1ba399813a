#include <map>
#include <string>

#include "cycle_kernel.hpp"
#include "cycleforge/cycle_search.hpp"
#include "cycleforge/error.hpp"

namespace cycleforge {

namespace {

std::size_t effective_limit(const SearchConfig& config) {
  return config.max_vertices != 0 ? config.max_vertices : search_vertex_limit();
}

void guard(const Graph& g, const SearchConfig& config, const char* what) {
  require_order_at_most(g.order(), effective_limit(config), what);
  require_order_at_most(g.order(), kKernelVertexCeiling, what);
}

// Every hamiltonian cycle contains vertex 0, so a single root suffices.
template <typename OnCycle>
SearchStats for_each_hamiltonian_cycle(const Graph& g, const SearchConfig& config, OnCycle&& on_cycle) {
  SearchStats stats;
  const std::size_t n = g.order();
  if (n < 3) return stats;
  detail::dispatch_width(n, [&]<std::size_t W>() {
    detail::NodeBudget budget(config.node_budget);
    detail::CycleKernel<W> kernel(g, config.prune, budget);
    kernel.search_root(0, n, n, false, on_cycle, stats);
  });
  return stats;
}

template <std::size_t W>
class HamPathKernel {
 public:
  using Set = detail::Bits<W>;

  HamPathKernel(const Graph& g, bool prune, detail::NodeBudget& budget)
      : n_(g.order()), prune_(prune), budget_(budget), adj_(g.order()), nbr_(g.order()) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        adj_[v].push_back(static_cast<std::size_t>(w));
        nbr_[v].set(static_cast<std::size_t>(w));
      }
    }
  }

  std::uint64_t count(std::size_t s, std::size_t t) {
    target_ = t;
    total_ = 0;
    unvisited_ = Set::range(0, n_);
    unvisited_.reset(s);
    remaining_ = n_ - 1;
    extend(s);
    budget_.charge(pending_);
    pending_ = 0;
    return total_;
  }

 private:
  void extend(std::size_t end) {
    if (++pending_ == detail::CycleKernel<W>::kFlushEvery) {
      budget_.charge(pending_);
      pending_ = 0;
    }
    if (end == target_) {
      if (remaining_ == 0) detail::add_checked(total_, 1);
      return;
    }
    if (prune_ && !feasible(end)) return;
    for (std::size_t w : adj_[end]) {
      if (!unvisited_.test(w) || (w == target_ && remaining_ != 1)) continue;
      unvisited_.reset(w);
      --remaining_;
      extend(w);
      ++remaining_;
      unvisited_.set(w);
    }
  }

  // The rest of the path must cover every unvisited vertex, ending at the
  // target: all of them reachable, and each with enough usable neighbours.
  bool feasible(std::size_t end) const {
    Set seen = nbr_[end] & unvisited_;
    Set frontier = seen;
    while (frontier.any()) {
      Set next;
      frontier.for_each([&](std::size_t x) { next |= nbr_[x]; });
      next &= unvisited_;
      next.and_not(seen);
      seen |= next;
      frontier = next;
    }
    if (seen.count() != remaining_) return false;
    Set support = unvisited_;
    support.set(end);
    bool ok = true;
    unvisited_.for_each([&](std::size_t x) {
      const std::size_t need = x == target_ ? 1 : 2;
      if (nbr_[x].count_and(support) < need) ok = false;
    });
    return ok;
  }

  std::size_t n_;
  bool prune_;
  detail::NodeBudget& budget_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Set> nbr_;
  std::size_t target_ = 0;
  std::uint64_t total_ = 0;
  Set unvisited_;
  std::size_t remaining_ = 0;
  std::uint64_t pending_ = 0;
};

}  // namespace

HamiltonianCount count_hamiltonian_cycles(const Graph& g, const SearchConfig& config) {
  guard(g, config, "hamiltonian cycle count");
  HamiltonianCount result;
  result.stats = for_each_hamiltonian_cycle(g, config, [&](const std::vector<Vertex>& path) {
    detail::add_checked(result.count, 1);
    if (result.witnesses.size() < config.max_witnesses) result.witnesses.push_back(path);
  });
  return result;
}

std::uint64_t count_hamiltonian_paths(const Graph& g, Vertex s, Vertex t, const SearchConfig& config) {
  const auto n = static_cast<Vertex>(g.order());
  if (s < 0 || t < 0 || s >= n || t >= n) throw Error(ErrorCode::IndexOutOfRange, "path endpoint");
  if (s == t) throw Error(ErrorCode::SameEndpoint, "hamiltonian path endpoints must differ");
  guard(g, config, "hamiltonian path count");
  return detail::dispatch_width(g.order(), [&]<std::size_t W>() {
    detail::NodeBudget budget(config.node_budget);
    HamPathKernel<W> kernel(g, config.prune, budget);
    return kernel.count(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
  });
}

EdgeHamIncidence hamiltonian_edge_incidence(const Graph& g, const SearchConfig& config) {
  guard(g, config, "hamiltonian edge incidence");
  EdgeHamIncidence inc;
  inc.edges = g.edges();
  inc.count.assign(inc.edges.size(), 0);
  std::map<Edge, std::size_t> index;
  for (std::size_t k = 0; k < inc.edges.size(); ++k) index.emplace(inc.edges[k], k);
  for_each_hamiltonian_cycle(g, config, [&](const std::vector<Vertex>& path) {
    detail::add_checked(inc.total, 1);
    for (std::size_t k = 0; k < path.size(); ++k) {
      Vertex a = path[k];
      Vertex b = path[(k + 1) % path.size()];
      ++inc.count[index.at(a < b ? Edge{a, b} : Edge{b, a})];
    }
  });
  return inc;
}

}  // namespace cycleforge
