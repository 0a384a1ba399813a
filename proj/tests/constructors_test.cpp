#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "cycleforge/analysis.hpp"
#include "cycleforge/constructors.hpp"
#include "cycleforge/cycle_search.hpp"
#include "cycleforge/error.hpp"
#include "oracles.hpp"

namespace cycleforge {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::IOFailure;
}

std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    for (Vertex w : g.neighbors(e.b)) count += w > e.b && g.adjacent(e.a, w);
  }
  return count;
}

TEST(GeneralizedPetersenTest, Gp92) {
  Graph g = generalized_petersen(9, 2);
  EXPECT_EQ(g.order(), 18u);
  EXPECT_EQ(g.size(), 27u);
  EXPECT_TRUE(is_cubic(g));
  EXPECT_EQ(oracle::girth(g), 5u);
}

TEST(GeneralizedPetersenTest, SmallMembers) {
  EXPECT_EQ(oracle::hamiltonian_cycles(petersen()), 0u);
  EXPECT_EQ(oracle::girth(petersen()), 5u);
  Graph cube = generalized_petersen(4, 1);
  EXPECT_EQ(oracle::girth(cube), 4u);
  EXPECT_EQ(cube.size(), 12u);
}

TEST(GeneralizedPetersenTest, InvalidParameters) {
  EXPECT_EQ(code_of([] { generalized_petersen(4, 2); }), ErrorCode::InvalidParameters);
  EXPECT_EQ(code_of([] { generalized_petersen(2, 1); }), ErrorCode::InvalidParameters);
  EXPECT_EQ(code_of([] { generalized_petersen(9, 0); }), ErrorCode::InvalidParameters);
}

TEST(K4Test, Basics) {
  EXPECT_TRUE(is_cubic(k4()));
  EXPECT_EQ(oracle::hamiltonian_cycles(k4()), 3u);
  EXPECT_EQ(oracle::girth(k4()), 3u);
}

// Edge list read off the drawing coordinates by an independent script.
TEST(ChiaThomassenTest, MatchesDrawingTranscription) {
  const EdgeList drawn{
      {0, 5}, {0, 10}, {0, 15}, {1, 6}, {1, 11}, {1, 16}, {2, 7}, {2, 12}, {2, 17}, {3, 8}, {3, 13}, {3, 18},
      {4, 9}, {4, 14}, {4, 19}, {5, 10}, {5, 13}, {6, 11}, {6, 14}, {7, 10}, {7, 12}, {8, 11}, {8, 13}, {9, 12},
      {9, 14}, {15, 20}, {15, 27}, {16, 20}, {16, 24}, {17, 21}, {17, 25}, {18, 22}, {18, 26}, {19, 23}, {19, 27}, {20, 24},
      {21, 24}, {21, 25}, {22, 26}, {22, 53}, {23, 26}, {23, 27}, {25, 50}, {28, 33}, {28, 38}, {28, 43}, {29, 34}, {29, 39},
      {29, 44}, {30, 35}, {30, 40}, {30, 45}, {31, 36}, {31, 41}, {31, 46}, {32, 37}, {32, 42}, {32, 47}, {33, 38}, {33, 41},
      {34, 39}, {34, 42}, {35, 38}, {35, 40}, {36, 39}, {36, 41}, {37, 40}, {37, 42}, {43, 48}, {43, 55}, {44, 48}, {44, 52},
      {45, 49}, {45, 53}, {46, 50}, {46, 54}, {47, 51}, {47, 55}, {48, 52}, {49, 52}, {49, 53}, {50, 54}, {51, 54}, {51, 55}};
  EXPECT_EQ(chia_thomassen(), Graph(56, drawn));
}

TEST(ChiaThomassenTest, ValidityGateStructure) {
  Graph g = chia_thomassen();
  EXPECT_EQ(g.order(), 56u);
  EXPECT_TRUE(is_cubic(g));
  EXPECT_EQ(vertex_connectivity(g).kappa, 2u);
  EXPECT_EQ(girth(g).girth, 3u);
  // The two halves are joined by exactly two edges.
  std::size_t crossing = 0;
  for (const Edge& e : g.edges()) crossing += (e.a < 28) != (e.b < 28);
  EXPECT_EQ(crossing, 2u);
}

TEST(MarryTest, K4WithK4IsPrism) {
  for (std::uint8_t b = 0; b < kBijectionCount; ++b) {
    auto m = marry(make_marriage_plan(k4(), 1, k4(), 2, b));
    EXPECT_EQ(m.graph.order(), 6u);
    EXPECT_EQ(m.graph.size(), 9u);
    EXPECT_TRUE(is_cubic(m.graph));
    EXPECT_EQ(oracle::girth(m.graph), 3u);
    EXPECT_EQ(triangle_count(m.graph), 2u);
    EXPECT_GT(oracle::hamiltonian_cycles(m.graph), 0u);
  }
}

TEST(MarryTest, Gp92WithItself) {
  Graph gp = generalized_petersen(9, 2);
  auto m = marry(make_marriage_plan(gp, 4, gp, 0));
  EXPECT_EQ(m.graph.order(), 34u);
  EXPECT_TRUE(is_cubic(m.graph));
  ASSERT_EQ(m.origin.order(), 34u);
  EXPECT_EQ(m.origin[0], (OriginEntry{0, kNoGuest}));
  EXPECT_EQ(m.origin[17], (OriginEntry{4, 0}));
  EXPECT_EQ(m.origin[33], (OriginEntry{4, 16}));
  validate_origin(m.origin, m.graph.order());
}

TEST(MarryTest, DegreeMismatch) {
  Graph tri = cycle_graph(3);
  EXPECT_EQ(code_of([&] { make_marriage_plan(tri, 0, k4(), 0); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([&] { make_marriage_plan(k4(), 0, tri, 0); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([&] { make_marriage_plan(k4(), 0, k4(), 0, 6); }), ErrorCode::InvalidParameters);
}

TEST(MarryTest, AllBijectionsAgreeOnOrderSizeCubicity) {
  std::mt19937 rng(5);
  for (std::size_t n = 4; n <= 20; n += 2) {
    Graph host = corpus::random_cubic(n, rng);
    Graph guest = corpus::random_cubic(std::max<std::size_t>(4, 20 - n), rng);
    for (Vertex a : {Vertex{0}, static_cast<Vertex>(n - 1)}) {
      for (std::uint8_t b = 0; b < kBijectionCount; ++b) {
        auto m = marry(make_marriage_plan(host, a, guest, 1, b));
        EXPECT_EQ(m.graph.order(), host.order() + guest.order() - 2);
        EXPECT_EQ(m.graph.size(), host.size() + guest.size() - 3);
        EXPECT_TRUE(is_cubic(m.graph));
      }
    }
  }
}

TEST(MarryTest, MatchingEdgesJoinTheRightNeighbours) {
  Graph gp = generalized_petersen(9, 2);
  for (std::uint8_t b = 0; b < kBijectionCount; ++b) {
    auto plan = make_marriage_plan(k4(), 0, gp, 0, b);
    auto m = marry(plan);
    auto perm = bijection_permutation(b);
    // host K4 - 0 keeps vertices 1,2,3 as 0,1,2; guest copy starts at 3.
    for (std::size_t k = 0; k < 3; ++k) {
      Vertex host_side = plan.host_neighbors[k] - 1;
      Vertex guest_side = 3 + plan.guest_neighbors[perm[k]] - 1;
      EXPECT_TRUE(m.graph.adjacent(host_side, guest_side));
    }
  }
}

TEST(MarryAllTest, TruncatedK4) {
  auto m = marry_all(k4(), k4(), 0);
  EXPECT_EQ(m.graph.order(), 12u);
  EXPECT_EQ(m.graph.size(), 18u);
  EXPECT_TRUE(is_cubic(m.graph));
  auto longest = oracle::longest(m.graph);
  EXPECT_EQ(longest.length, 12u);
  EXPECT_EQ(longest.count, 3u);
  EXPECT_EQ(oracle::hamiltonian_cycles(m.graph), oracle::hamiltonian_cycles(k4()));
}

TEST(MarryAllTest, TruncatedPetersen) {
  auto m = marry_all(petersen(), k4(), 0);
  EXPECT_EQ(m.graph.order(), 30u);
  EXPECT_EQ(oracle::longest(petersen()).length, 9u);
  auto census = longest_cycle_census(m.graph);
  EXPECT_EQ(census.circumference, 27u);
}

TEST(MarryAllTest, ChiaThomassenWithGp92) {
  auto m = marry_all(chia_thomassen(), generalized_petersen(9, 2), 0);
  EXPECT_EQ(m.graph.order(), 952u);
  EXPECT_TRUE(is_cubic(m.graph));
  EXPECT_EQ(girth(m.graph).girth, 5u);
  EXPECT_TRUE(is_k_connected(m.graph, 2));
}

TEST(MarryAllTest, NotCubicHost) {
  EXPECT_EQ(code_of([] { marry_all(cycle_graph(4), k4(), 0); }), ErrorCode::NotCubic);
  EXPECT_EQ(code_of([] { marry_all(k4(), cycle_graph(4), 0); }), ErrorCode::DegreeMismatch);
}

TEST(MarryAllTest, TruncationReplacesVerticesByTriangles) {
  for (const auto& g : corpus::cubic_up_to_12()) {
    auto m = marry_all(g, k4(), 0);
    EXPECT_TRUE(is_cubic(m.graph));
    EXPECT_GE(triangle_count(m.graph) + 0u, g.order());
    EXPECT_EQ(girth(m.graph).girth, 3u);
  }
}

TEST(MarryAllTest, FibersInduceGuestMinusU) {
  const Graph gp = generalized_petersen(9, 2);
  const Graph fiber = delete_vertex(gp, 0).graph;
  for (const Graph& host : {k4(), complete_bipartite(3, 3), petersen()}) {
    auto m = marry_all(host, gp, 0, BijectionPolicy::fixed(3));
    validate_origin(m.origin, m.graph.order());
    for (std::size_t i = 0; i < host.order(); ++i) {
      std::vector<Vertex> members;
      for (std::size_t v = 0; v < m.graph.order(); ++v) {
        if (m.origin.entries[v].host == static_cast<Vertex>(i)) members.push_back(static_cast<Vertex>(v));
      }
      ASSERT_EQ(members.size(), 17u);
      for (std::size_t j = 0; j < members.size(); ++j) {
        EXPECT_EQ(m.origin[members[j]], (OriginEntry{static_cast<Vertex>(i), static_cast<Vertex>(j)}));
        EXPECT_EQ(static_cast<std::size_t>(members[j]), i * 17 + j);
      }
      EXPECT_EQ(induced_subgraph(m.graph, members), fiber);
    }
    // Each host edge becomes exactly one edge between the two fibers.
    for (const Edge& e : host.edges()) {
      std::size_t between = 0;
      for (const Edge& f : m.graph.edges()) {
        Vertex ha = m.origin[f.a].host;
        Vertex hb = m.origin[f.b].host;
        between += (ha == e.a && hb == e.b) || (ha == e.b && hb == e.a);
      }
      EXPECT_EQ(between, 1u);
    }
  }
}

TEST(MarryAllTest, PerVertexBijections) {
  BijectionPolicy policy;
  policy.per_vertex = {0, 1, 2, 3};
  auto m = marry_all(k4(), generalized_petersen(9, 2), 0, policy);
  EXPECT_TRUE(is_cubic(m.graph));
  policy.per_vertex = {0, 1};
  EXPECT_EQ(code_of([&] { marry_all(k4(), k4(), 0, policy); }), ErrorCode::InvalidParameters);
}

TEST(FamilyTest, Orders) {
  EXPECT_EQ(family_order(0), 56u);
  EXPECT_EQ(family_order(1), 952u);
  EXPECT_EQ(family_order(2), 16184u);
  EXPECT_EQ(family_order(3), 56u * 17 * 17 * 17);

  auto f0 = family_member(0);
  EXPECT_EQ(f0.graph, chia_thomassen());
  EXPECT_TRUE(f0.origins.empty());

  auto f1 = family_member(1);
  EXPECT_EQ(f1.graph.order(), 952u);
  EXPECT_TRUE(is_cubic(f1.graph));
  ASSERT_EQ(f1.origins.size(), 1u);
  EXPECT_EQ(f1.origins[0].host_order, 56u);
}

TEST(FamilyTest, SecondMemberHasGirthFive) {
  auto f2 = family_member(2);
  EXPECT_EQ(f2.graph.order(), 16184u);
  EXPECT_TRUE(is_cubic(f2.graph));
  ASSERT_EQ(f2.origins.size(), 2u);
  EXPECT_EQ(f2.origins[1].host_order, 952u);
  EXPECT_EQ(girth(f2.graph, 4).girth, 5u);
}

TEST(FamilyTest, ResourceLimit) {
  FamilyConfig config;
  config.max_order = 1000;
  EXPECT_EQ(code_of([&] { family_member(2, config); }), ErrorCode::ResourceLimit);
  EXPECT_EQ(code_of([&] { family_member(40); }), ErrorCode::ResourceLimit);
}

}  // namespace
}  // namespace cycleforge
