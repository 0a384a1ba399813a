#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "cycleforge/cycle_search.hpp"
#include "cycleforge/error.hpp"
#include "cycleforge/graph.hpp"

namespace cycleforge::detail {

// Shared node budget. Workers flush their local counts in chunks, so the
// limit is enforced to within a chunk per worker.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t nodes) {
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_) {
      throw Error(ErrorCode::ResourceLimit, "search exceeded the node budget of " + std::to_string(limit_));
    }
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

inline void add_checked(std::uint64_t& total, std::uint64_t more) {
  if (__builtin_add_overflow(total, more, &total)) throw Error(ErrorCode::CountOverflow, "cycle count overflowed 64 bits");
}

// Depth-first enumeration of the simple cycles whose smallest vertex is a
// given root, each produced once: the walk starts root -> c1 and may only
// close from a last vertex larger than c1.
template <std::size_t W>
class CycleKernel {
 public:
  using Set = Bits<W>;
  static constexpr std::uint64_t kFlushEvery = 1 << 14;

  CycleKernel(const Graph& g, bool prune, NodeBudget& budget)
      : n_(g.order()), prune_(prune), budget_(budget), adj_(g.order()), nbr_(g.order()) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        adj_[v].push_back(static_cast<std::size_t>(w));
        nbr_[v].set(static_cast<std::size_t>(w));
      }
    }
    above_.resize(n_ + 1);
    for (std::size_t v = 0; v <= n_; ++v) above_[v] = Set::range(v, n_);
  }

  // Visits every cycle through `root` using only vertices >= root whose
  // length lies in [min_len, max_len]. When `raise` is set, each reported
  // cycle lifts min_len past its length, turning the walk into a
  // branch-and-bound search for the longest cycle.
  template <typename OnCycle>
  void search_root(std::size_t root, std::size_t min_len, std::size_t max_len, bool raise, OnCycle&& on_cycle,
                   SearchStats& stats) {
    root_ = root;
    min_len_ = min_len;
    max_len_ = max_len;
    raise_ = raise;
    stats_ = &stats;
    allowed_ = above_[root];
    visited_ = Set{};
    visited_.set(root);
    path_.assign(1, static_cast<Vertex>(root));
    if (max_len < 3 || min_len > max_len) return;
    if (prune_ && root_bound() < min_len_) {
      ++stats.bound_prunes;
      return;
    }
    for (std::size_t first : adj_[root]) {
      if (first <= root) continue;
      first_ = first;
      closers_ = nbr_[root] & above_[first + 1];
      closers_ &= allowed_;
      if (!closers_.any()) continue;
      visited_.set(first);
      path_.push_back(static_cast<Vertex>(first));
      extend(first, on_cycle);
      path_.pop_back();
      visited_.reset(first);
    }
    flush();
  }

  void flush() {
    if (pending_) {
      budget_.charge(pending_);
      pending_ = 0;
    }
  }

  // Upper bound on the length of a cycle with smallest vertex `root`: the
  // root plus what survives degree-2 peeling in its component of G[>= root].
  std::size_t root_bound_for(std::size_t root) {
    root_ = root;
    allowed_ = above_[root];
    Set pool = allowed_;
    peel(pool, Set{}, Set{}, root);
    Set comp = reach_from(root, pool);
    comp.set(root);
    return pool.test(root) ? comp.count() : 0;
  }

 private:
  std::size_t root_bound() { return root_bound_for(root_); }

  template <typename OnCycle>
  void extend(std::size_t end, OnCycle& on_cycle) {
    ++stats_->nodes;
    if (++pending_ == kFlushEvery) flush();
    const std::size_t len = path_.size();
    if (len >= 3 && closers_.test(end) && len >= min_len_) {
      on_cycle(path_);
      if (raise_) min_len_ = len + 1;
    }
    if (len >= max_len_) return;
    if (prune_ && bound(end, len) < min_len_) {
      ++stats_->bound_prunes;
      return;
    }
    for (std::size_t w : adj_[end]) {
      if (!allowed_.test(w) || visited_.test(w)) continue;
      visited_.set(w);
      path_.push_back(static_cast<Vertex>(w));
      extend(w, on_cycle);
      path_.pop_back();
      visited_.reset(w);
    }
  }

  // Vertices reachable from `from` inside `pool` (excluding `from`).
  Set reach_from(std::size_t from, const Set& pool) const {
    Set seen = nbr_[from] & pool;
    Set frontier = seen;
    while (frontier.any()) {
      Set next;
      frontier.for_each([&](std::size_t x) { next |= nbr_[x]; });
      next &= pool;
      next.and_not(seen);
      seen |= next;
      frontier = next;
    }
    seen.reset(from);
    return seen;
  }

  // Removes from `pool` every vertex that cannot be interior to the closing
  // path: it needs two usable neighbours among pool, the open end, and (for
  // closers) the root.
  void peel(Set& pool, const Set& closers, const Set& ends, std::size_t root) const {
    bool changed = true;
    while (changed) {
      changed = false;
      Set support = pool | ends;
      Set drop;
      pool.for_each([&](std::size_t x) {
        std::size_t deg = nbr_[x].count_and(support);
        if (x != root && closers.test(x)) ++deg;
        if (x == root) deg = 2;
        if (deg < 2) drop.set(x);
      });
      if (drop.any()) {
        pool.and_not(drop);
        changed = true;
      }
    }
  }

  std::size_t bound(std::size_t end, std::size_t len) const {
    Set pool = allowed_;
    pool.and_not(visited_);
    Set ends;
    ends.set(end);
    Set reach = reach_from(end, pool);
    Set live_closers = closers_ & reach;
    const bool end_closes = closers_.test(end);
    if (!live_closers.any()) return end_closes ? len : 0;
    peel(reach, closers_, ends, n_);
    reach = reach_from(end, reach);
    if (!reach.intersects(closers_)) return end_closes ? len : 0;
    return len + reach.count();
  }

  std::size_t n_;
  bool prune_;
  NodeBudget& budget_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Set> nbr_;
  std::vector<Set> above_;

  std::size_t root_ = 0;
  std::size_t first_ = 0;
  std::size_t min_len_ = 3;
  std::size_t max_len_ = 0;
  bool raise_ = false;
  SearchStats* stats_ = nullptr;
  Set allowed_;
  Set visited_;
  Set closers_;
  std::vector<Vertex> path_;
  std::uint64_t pending_ = 0;
};

// Calls body.template operator()<W>() with the smallest supported word count.
template <typename Body>
decltype(auto) dispatch_width(std::size_t n, Body&& body) {
  if (n <= 64) return body.template operator()<1>();
  if (n <= 128) return body.template operator()<2>();
  if (n <= 256) return body.template operator()<4>();
  if (n <= 512) return body.template operator()<8>();
  return body.template operator()<16>();
}

}  // namespace cycleforge::detail
