#include "cycleforge/cycle_search.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "cycle_kernel.hpp"
#include "cycleforge/error.hpp"
#include "parallel.hpp"

namespace cycleforge {

namespace {

std::size_t effective_limit(const SearchConfig& config) {
  return config.max_vertices != 0 ? config.max_vertices : search_vertex_limit();
}

void guard(const Graph& g, std::size_t limit, const char* what) {
  require_order_at_most(g.order(), limit, what);
  require_order_at_most(g.order(), kKernelVertexCeiling, what);
}

struct RootResult {
  std::size_t best = 0;
  std::uint64_t count = 0;
  std::vector<CycleWitness> witnesses;
  SearchStats stats;
};

// One kernel per worker, built lazily.
template <std::size_t W>
class KernelPool {
 public:
  KernelPool(const Graph& g, const SearchConfig& config, detail::NodeBudget& budget)
      : g_(g), prune_(config.prune), budget_(budget), kernels_(std::max(1u, config.threads)) {}

  detail::CycleKernel<W>& get(unsigned worker) {
    auto& slot = kernels_[worker];
    if (!slot) slot = std::make_unique<detail::CycleKernel<W>>(g_, prune_, budget_);
    return *slot;
  }

 private:
  const Graph& g_;
  bool prune_;
  detail::NodeBudget& budget_;
  std::vector<std::unique_ptr<detail::CycleKernel<W>>> kernels_;
};

template <std::size_t W>
CycleCensus census_impl(const Graph& g, const SearchConfig& config) {
  const std::size_t n = g.order();
  detail::NodeBudget budget(config.node_budget);
  KernelPool<W> pool(g, config, budget);
  CycleCensus census;

  // Phase 1: probe thresholds from the structural upper bound downwards.
  // Without pruning a single probe at threshold 3 sees every cycle.
  std::size_t upper = 3;
  if (config.prune) {
    auto& k = pool.get(0);
    for (std::size_t r = 0; r < n; ++r) upper = std::max(upper, k.root_bound_for(r));
  }
  std::size_t circumference = 0;
  for (std::size_t threshold = upper; threshold >= 3 && circumference == 0; --threshold) {
    std::vector<RootResult> roots(n);
    detail::parallel_for(n, config.threads, [&](unsigned w, std::size_t r) {
      auto& res = roots[r];
      pool.get(w).search_root(
          r, threshold, n, true, [&](const std::vector<Vertex>& path) { res.best = std::max(res.best, path.size()); },
          res.stats);
    });
    ++census.stats.probes;
    for (const auto& res : roots) {
      census.stats += res.stats;
      circumference = std::max(circumference, res.best);
    }
  }
  if (circumference == 0) throw Error(ErrorCode::AcyclicGraph, "graph has no cycle");

  // Phase 2: count the cycles of exactly that length.
  std::vector<RootResult> roots(n);
  detail::parallel_for(n, config.threads, [&](unsigned w, std::size_t r) {
    auto& res = roots[r];
    pool.get(w).search_root(
        r, circumference, circumference, false,
        [&](const std::vector<Vertex>& path) {
          detail::add_checked(res.count, 1);
          if (res.witnesses.size() < config.max_witnesses) res.witnesses.push_back(path);
        },
        res.stats);
  });
  census.circumference = circumference;
  for (auto& res : roots) {
    census.stats += res.stats;
    detail::add_checked(census.count, res.count);
    for (auto& c : res.witnesses) {
      if (census.witnesses.size() < config.max_witnesses) census.witnesses.push_back(std::move(c));
    }
  }
  return census;
}

}  // namespace

CycleCensus longest_cycle_census(const Graph& g, const SearchConfig& config) {
  guard(g, effective_limit(config), "longest-cycle census");
  if (g.order() < 3) throw Error(ErrorCode::AcyclicGraph, "graph has no cycle");
  return detail::dispatch_width(g.order(), [&]<std::size_t W>() { return census_impl<W>(g, config); });
}

void for_each_cycle(const Graph& g, const std::function<void(const CycleWitness&)>& visit, std::size_t max_vertices) {
  guard(g, max_vertices != 0 ? max_vertices : enumeration_vertex_limit(), "cycle enumeration");
  const std::size_t n = g.order();
  if (n < 3) return;
  detail::dispatch_width(n, [&]<std::size_t W>() {
    detail::NodeBudget budget(kDefaultNodeBudget);
    detail::CycleKernel<W> kernel(g, true, budget);
    SearchStats stats;
    for (std::size_t r = 0; r < n; ++r) {
      kernel.search_root(r, 3, n, false, [&](const std::vector<Vertex>& path) { visit(path); }, stats);
    }
  });
}

std::vector<CycleWitness> all_cycles(const Graph& g, std::size_t max_vertices) {
  std::vector<CycleWitness> out;
  for_each_cycle(g, [&](const CycleWitness& c) { out.push_back(c); }, max_vertices);
  return out;
}

}  // namespace cycleforge
