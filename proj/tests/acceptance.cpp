// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "cycleforge/analysis.hpp"
#include "cycleforge/certify.hpp"
#include "cycleforge/constructors.hpp"
#include "cycleforge/cycle_search.hpp"
#include "oracles.hpp"

using namespace cycleforge;

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

template <typename A, typename B>
void require_eq(const A& actual, const B& expected, const std::string& what) {
  if (!(actual == expected)) {
    std::ostringstream msg;
    msg << what << ": expected " << expected << ", got " << actual;
    throw Failure{msg.str()};
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> body;  // returns a note for the report line
};

// Criterion 1
std::string gp92_verification() {
  const Graph g = generalized_petersen(9, 2);
  require(is_cubic(g), "GP(9,2) not cubic");
  require_eq(girth(g).girth.value_or(0), std::size_t{5}, "girth");
  require_eq(vertex_connectivity(g).kappa, std::size_t{3}, "kappa");
  require_eq(count_hamiltonian_cycles(g).count, std::uint64_t{3}, "hamiltonian cycles");
  return "cubic, girth 5, kappa 3, 3 hamiltonian cycles";
}

// Criterion 2
std::string unique_paths(double per_pair_limit) {
  const Graph g = generalized_petersen(9, 2);
  double worst = 0;
  std::size_t pairs = 0;
  for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u) {
    auto minus = delete_vertex(g, u);
    require_eq(girth(minus.graph).girth.value_or(0), std::size_t{5}, "girth of GP(9,2) - " + std::to_string(u));
    auto nb = g.neighbors(u);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const auto start = std::chrono::steady_clock::now();
        auto count = count_hamiltonian_paths(minus.graph, minus.remap[static_cast<std::size_t>(nb[a])],
                                             minus.remap[static_cast<std::size_t>(nb[b])]);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        worst = std::max(worst, secs);
        require_eq(count, std::uint64_t{1},
                   "paths in GP(9,2) - " + std::to_string(u) + " between " + std::to_string(nb[a]) + " and " +
                       std::to_string(nb[b]));
        ++pairs;
      }
    }
  }
  require(worst < per_pair_limit, "a pair exceeded " + std::to_string(per_pair_limit) + " s");
  std::ostringstream note;
  note << pairs << " pairs, slowest " << worst << " s";
  return note.str();
}

// Criterion 3
std::string chia_thomassen_gate() {
  const Graph g = chia_thomassen();
  require_eq(g.order(), std::size_t{56}, "order");
  require(is_cubic(g), "not cubic");
  require_eq(vertex_connectivity(g).kappa, std::size_t{2}, "kappa");
  require_eq(girth(g).girth.value_or(0), std::size_t{3}, "girth");
  auto census = longest_cycle_census(g);
  require_eq(census.count, std::uint64_t{1}, "longest cycle count");
  require(census.circumference <= 54, "circumference " + std::to_string(census.circumference) + " > 54");
  require(census.witnesses.size() == 1 && is_simple_cycle(g, census.witnesses[0]) &&
              census.witnesses[0].size() == census.circumference,
          "witness is not a longest cycle");
  return "circumference " + std::to_string(census.circumference) + " (recorded), count 1, " +
         std::to_string(census.stats.nodes) + " search nodes";
}

// Criterion 4
std::string family_bounds() {
  const Graph h = family_member(1).graph;
  require_eq(h.order(), std::size_t{952}, "order");
  require(is_cubic(h), "not cubic");
  require_eq(girth(h).girth.value_or(0), std::size_t{5}, "girth");
  require(is_k_connected(h, 2), "not 2-connected");
  return "952 vertices, cubic, girth 5, 2-connected";
}

// Criterion 5
std::string lifting() {
  struct Case {
    const char* name;
    Graph g;
  };
  std::vector<Case> cases{{"K4", k4()},
                          {"K33", complete_bipartite(3, 3)},
                          {"Petersen", petersen()},
                          {"GP(9,2)", generalized_petersen(9, 2)}};
  std::ostringstream note;
  for (const auto& c : cases) {
    auto base = longest_cycle_census(c.g);
    auto base_oracle = oracle::longest(c.g);
    require_eq(base.circumference, base_oracle.length, std::string(c.name) + " circumference vs oracle");
    require_eq(base.count, base_oracle.count, std::string(c.name) + " count vs oracle");

    auto married = marry_all(c.g, k4(), 0);
    SearchConfig config;
    config.max_witnesses = 64;
    auto lifted = longest_cycle_census(married.graph, config);
    require_eq(lifted.circumference, 3 * base.circumference, std::string(c.name) + " lifted circumference");
    require_eq(lifted.count, base.count, std::string(c.name) + " lifted count");
    if (married.graph.order() <= 22) {
      auto h_oracle = oracle::longest(married.graph);
      require_eq(h_oracle.length, lifted.circumference, std::string(c.name) + " lifted oracle circumference");
      require_eq(h_oracle.count, lifted.count, std::string(c.name) + " lifted oracle count");
    }
    // Every longest cycle of H collapses to a longest cycle of G1 through full fibers.
    std::set<CycleWitness> images;
    for (const auto& w : lifted.witnesses) {
      auto p = project_cycle(married.graph, married.origin, w);
      auto* host = std::get_if<HostCycle>(&p);
      require(host != nullptr, std::string(c.name) + ": longest cycle is internal");
      require_eq(host->cycle.size(), base.circumference, std::string(c.name) + " projected length");
      for (const auto& f : host->fibers) require_eq(f.path.size(), std::size_t{3}, "fiber path length");
      images.insert(canonical_cycle(host->cycle));
    }
    require_eq(images.size(), lifted.witnesses.size(), std::string(c.name) + " distinct projections");
    note << (note.tellp() > 0 ? "; " : "") << c.name << " " << base.circumference << "/" << base.count << " -> " << lifted.circumference << "/"
         << lifted.count;
  }
  return note.str();
}

// Criterion 6
std::string projection_totality() {
  auto married = marry_all(k4(), k4(), 0);
  const Graph& h = married.graph;
  const std::size_t longest = oracle::longest(h).length;
  std::size_t internal = 0;
  std::size_t host = 0;
  std::size_t longest_seen = 0;
  for (const auto& c : all_cycles(h)) {
    auto p = project_cycle(h, married.origin, c);
    if (auto* in = std::get_if<InternalCycle>(&p)) {
      ++internal;
      require_eq(in->cycle.size(), c.size(), "internal cycle length");
      continue;
    }
    ++host;
    const auto& hc = std::get<HostCycle>(p);
    std::size_t total = 0;
    for (const auto& f : hc.fibers) total += f.path.size();
    require_eq(total, c.size(), "fiber paths cover the cycle");
    if (c.size() == longest) {
      ++longest_seen;
      for (const auto& f : hc.fibers) {
        require_eq(f.path.size(), married.origin.fiber_order, "longest cycle fiber path is not hamiltonian");
      }
    }
  }
  std::uint64_t total_oracle = 0;
  for (auto n : oracle::cycles_by_length(h)) total_oracle += n;
  require_eq(internal + host, total_oracle, "cycles classified");
  require_eq(longest_seen, std::size_t{3}, "longest cycles");
  return std::to_string(internal) + " internal, " + std::to_string(host) + " host cycles";
}

// Criterion 7
std::string parity_suites() {
  auto graphs = corpus::cubic_up_to_12();
  require_eq(graphs.size(), std::size_t{112}, "corpus size");
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    require(smith_edge_check(graphs[k]).passed(), "smith fails on corpus graph " + std::to_string(k));
    require(thomason_parity_check(graphs[k]).passed(), "thomason fails on corpus graph " + std::to_string(k));
  }
  return "112 connected cubic graphs";
}

// Criterion 8
std::string oracle_equivalence() {
  std::vector<Graph> graphs;
  for (auto& named : corpus::named_small()) graphs.push_back(named.graph);
  for (auto& g : corpus::connected_6()) graphs.push_back(g);
  for (auto& g : corpus::cubic_up_to_12()) graphs.push_back(g);
  for (auto& g : corpus::cubic_14()) graphs.push_back(g);
  for (auto& g : corpus::random_sparse(300, 4, 14, 2024)) graphs.push_back(g);
  SearchConfig bare;
  bare.prune = false;
  std::size_t compared = 0;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const Graph& g = graphs[k];
    std::size_t length = 0;
    std::uint64_t count = 0;
    for (const auto& c : all_cycles(g)) {
      if (c.size() > length) {
        length = c.size();
        count = 0;
      }
      if (c.size() == length) ++count;
    }
    auto dp = oracle::longest(g);
    require_eq(dp.length, length, "oracles disagree on graph " + std::to_string(k));
    require_eq(dp.count, count, "oracles disagree on graph " + std::to_string(k));
    if (length == 0) continue;
    for (const SearchConfig& config : {SearchConfig{}, bare}) {
      auto census = longest_cycle_census(g, config);
      const std::string tag = " on graph " + std::to_string(k) + (config.prune ? " (pruned)" : " (unpruned)");
      require_eq(census.circumference, length, "circumference" + tag);
      require_eq(census.count, count, "count" + tag);
    }
    ++compared;
  }
  return std::to_string(compared) + " graphs with cycles, " + std::to_string(graphs.size()) + " total";
}

// Criterion 9
std::string determinism() {
  auto certificate = [](const Graph& g, std::initializer_list<Check> checks) {
    VerifyOptions o;
    o.checks = checks;
    return strip_runtime_fields(certify(g, o).json);
  };
  auto run_all = [&] {
    std::vector<std::string> out;
    out.push_back(certificate(generalized_petersen(9, 2),
                              {Check::Cubic, Check::Girth, Check::Connectivity, Check::HamCount}));
    const Graph gp = generalized_petersen(9, 2);
    for (Vertex u = 0; u < static_cast<Vertex>(gp.order()); ++u) {
      out.push_back(certificate(delete_vertex(gp, u).graph, {Check::Girth, Check::HamCount}));
    }
    out.push_back(certificate(chia_thomassen(), {Check::Cubic, Check::Girth, Check::Connectivity, Check::Census,
                                                 Check::UniqueNonham}));
    return out;
  };
  auto first = run_all();
  auto second = run_all();
  require_eq(first.size(), second.size(), "certificate count");
  for (std::size_t k = 0; k < first.size(); ++k) require(first[k] == second[k], "certificate " + std::to_string(k) + " differs");
  return std::to_string(first.size()) + " certificates identical";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "GP(9,2) verification", 1.0, gp92_verification},
      {2, "unique hamiltonian paths in GP(9,2) - u", 54.0, [] { return unique_paths(1.0); }},
      {3, "Chia-Thomassen graph gate", 15 * 60.0, chia_thomassen_gate},
      {4, "family member 1 bounds", 120.0, family_bounds},
      {5, "lifting through truncation", 300.0, lifting},
      {6, "projection totality on truncated K4", 60.0, projection_totality},
      {7, "parity suites on cubic graphs up to 12 vertices", 600.0, parity_suites},
      {8, "census equals cycle oracles", 600.0, oracle_equivalence},
      {9, "certificate determinism", 15 * 60.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = true;
    try {
      note = c.body();
    } catch (const Failure& f) {
      ok = false;
      note = f.message;
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      note += " (time limit exceeded)";
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s: %s [%.3f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                note.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
