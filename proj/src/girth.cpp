#include <algorithm>
#include <limits>
#include <vector>

#include "cycleforge/analysis.hpp"
#include "parallel.hpp"

namespace cycleforge {

namespace {

struct Candidate {
  std::size_t length = std::numeric_limits<std::size_t>::max();
  CycleWitness cycle;

  void offer(std::size_t len, CycleWitness&& c) {
    if (len < length || (len == length && c < cycle)) {
      length = len;
      cycle = std::move(c);
    }
  }
};

class BfsScratch {
 public:
  explicit BfsScratch(std::size_t n) : dist_(n, kUnseen), parent_(n, -1) { queue_.reserve(n); }

  // Shortest cycles through the BFS tree rooted at `root`, skipping anything
  // longer than best.length.
  void run(const Graph& g, Vertex root, Candidate& best) {
    queue_.clear();
    queue_.push_back(root);
    dist_[idx(root)] = 0;
    parent_[idx(root)] = -1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex u = queue_[head];
      const std::size_t du = dist_[idx(u)];
      if (2 * du > best.length) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist_[idx(w)] == kUnseen) {
          dist_[idx(w)] = du + 1;
          parent_[idx(w)] = u;
          queue_.push_back(w);
        } else if (w != parent_[idx(u)] && dist_[idx(w)] >= du) {
          const std::size_t len = du + dist_[idx(w)] + 1;
          if (len <= best.length) {
            auto cycle = trace(u, w);
            if (cycle.size() == len && distinct(cycle, g.order())) best.offer(len, canonical_cycle(cycle));
          }
        }
      }
    }
    for (Vertex v : queue_) dist_[idx(v)] = kUnseen;
  }

 private:
  static constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  CycleWitness trace(Vertex u, Vertex w) const {
    CycleWitness left;
    for (Vertex v = u; v != -1; v = parent_[idx(v)]) left.push_back(v);
    CycleWitness right;
    for (Vertex v = w; v != -1; v = parent_[idx(v)]) right.push_back(v);
    // left ends at the root; right also ends at the root, which we drop.
    std::reverse(left.begin(), left.end());
    right.pop_back();
    std::reverse(right.begin(), right.end());
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  }

  bool distinct(const CycleWitness& c, std::size_t n) {
    mark_.assign(n, 0);
    for (Vertex v : c) {
      if (mark_[idx(v)]) return false;
      mark_[idx(v)] = 1;
    }
    return true;
  }

  std::vector<std::size_t> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> queue_;
  std::vector<char> mark_;
};

}  // namespace

GirthResult girth(const Graph& g, unsigned threads) {
  const std::size_t n = g.order();
  const unsigned workers = std::max(1u, threads);
  std::vector<Candidate> best(workers);
  std::vector<BfsScratch> scratch;
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);

  detail::parallel_for(n, workers, [&](unsigned w, std::size_t v) {
    scratch[w].run(g, static_cast<Vertex>(v), best[w]);
  });

  Candidate overall;
  for (auto& c : best) {
    if (!c.cycle.empty()) overall.offer(c.length, std::move(c.cycle));
  }
  GirthResult result;
  if (!overall.cycle.empty()) {
    result.girth = overall.length;
    result.witness = std::move(overall.cycle);
  }
  return result;
}

}  // namespace cycleforge
