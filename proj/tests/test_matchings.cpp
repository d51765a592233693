#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "clocklattice/diagram.hpp"
#include "clocklattice/error.hpp"
#include "clocklattice/generators.hpp"
#include "clocklattice/matchings.hpp"
#include "oracles.hpp"

namespace cl = clocklattice;

namespace {

constexpr const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

cl::BalancedGraph trefoil_gamma() {
  const auto u = cl::parse_pd(kTrefoil);
  return cl::build_balanced(u, cl::auto_stars(u));
}

std::vector<std::array<int, 2>> edge_list(const cl::PlaneGraph& g) {
  std::vector<std::array<int, 2>> out;
  for (cl::EdgeId e = 0; e < g.num_edges(); ++e) out.push_back(g.endpoints(e));
  return out;
}

}  // namespace

TEST(Enumerate, SmallExamples) {
  EXPECT_EQ(cl::enumerate_matchings(cl::grid_graph({1, 1})).size(), 2u);
  EXPECT_EQ(cl::enumerate_matchings(trefoil_gamma()).size(), 3u);
  EXPECT_EQ(cl::enumerate_matchings(cl::grid_graph({3, 3})).size(), 36u);
}

TEST(Enumerate, AgreesWithBruteForceAndKasteleyn) {
  for (const auto& spec : {cl::GridSpec{1, 1}, cl::GridSpec{3, 3}, cl::GridSpec{3, 5}, cl::GridSpec{1, 7}, cl::GridSpec{5, 5}}) {
    const auto b = cl::grid_graph(spec);
    const auto n = cl::enumerate_matchings(b).size();
    EXPECT_EQ(n, oracle::count_matchings(b)) << spec.m << "x" << spec.n;
    EXPECT_EQ(n, oracle::grid_dimers(spec.m + 1, spec.n + 1)) << spec.m << "x" << spec.n;
  }
  for (const char* name : {"trefoil", "figure8", "abe6", "k11n157"}) {
    const auto b = cl::load_fixture(name).gamma();
    EXPECT_EQ(cl::enumerate_matchings(b).size(), oracle::count_matchings(b)) << name;
  }
}

TEST(Enumerate, CanonicalOrderAndValidity) {
  const auto b = cl::load_fixture("abe6").gamma();
  const auto ms = cl::enumerate_matchings(b);
  EXPECT_EQ(ms.size(), 13u);
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
  EXPECT_EQ(std::set<cl::Matching>(ms.begin(), ms.end()).size(), ms.size());
  for (const auto& m : ms) EXPECT_NO_THROW(cl::validate_matching(b, m));
}

TEST(Enumerate, CapExceeded) {
  try {
    cl::enumerate_matchings(cl::grid_graph({3, 3}), 10);
    ADD_FAILURE() << "cap not enforced";
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.kind(), cl::ErrorKind::CapExceeded);
  }
  EXPECT_EQ(cl::enumerate_matchings(cl::grid_graph({3, 3}), 36).size(), 36u);
}

TEST(Validate, RejectsBadMatchings) {
  const auto b = cl::grid_graph({1, 1});
  const auto ms = cl::enumerate_matchings(b);
  auto bad = ms[0].edges();
  bad[1] = bad[0];
  EXPECT_THROW(cl::validate_matching(b, cl::Matching(bad)), cl::Error);
  EXPECT_THROW(cl::validate_matching(b, cl::Matching({0})), cl::Error);
}

TEST(FindMatching, ExistsOnEveryFixture) {
  for (const char* name : {"trefoil", "figure8", "abe6", "k11n157", "grid_5_7"}) {
    const auto b = cl::load_fixture(name).gamma();
    const auto m = cl::find_matching(b);
    ASSERT_TRUE(m.has_value()) << name;
    EXPECT_NO_THROW(cl::validate_matching(b, *m));
  }
}

TEST(SpanningTrees, SmallGraphs) {
  const cl::PlaneGraph triangle({{0, 1}, {1, 2}, {2, 0}}, {{0, 5}, {2, 1}, {4, 3}});
  EXPECT_EQ(cl::count_spanning_trees(triangle), 3);
  const cl::PlaneGraph doubled({{0, 1}, {0, 1}}, {{0, 2}, {3, 1}});
  EXPECT_EQ(cl::count_spanning_trees(doubled), 2);
  const cl::PlaneGraph loop({{0, 0}}, {{0, 1}});
  EXPECT_EQ(cl::count_spanning_trees(loop), 1);
}

TEST(SpanningTrees, BijectionWithMatchings) {
  for (const char* name : {"trefoil", "figure8", "abe6", "k11n157", "curl", "granny_shadow", "grid_3_3", "grid_3_5"}) {
    const auto fx = cl::load_fixture(name);
    const auto& u = *fx.universe;
    const auto stars = fx.star_pair();
    const auto [g, dual] = cl::build_tait(u, cl::checkerboard(u, stars));
    const auto trees = cl::count_spanning_trees(g);
    EXPECT_EQ(trees, cl::count_spanning_trees(dual)) << name;
    EXPECT_EQ(trees, oracle::count_spanning_trees_by_subsets(g.graph.num_vertices(), edge_list(g.graph))) << name;
    if (name != std::string("granny_shadow")) {
      EXPECT_EQ(trees, cl::enumerate_matchings(fx.gamma()).size()) << name;
    }
  }
}

TEST(SpanningTrees, LargeGridExact) {
  // 6 x 8 vertex grid: more states than the default cap, counted exactly.
  const auto fx = cl::load_fixture("grid_5_7");
  const auto [g, dual] = cl::build_tait(*fx.universe, cl::checkerboard(*fx.universe, fx.star_pair()));
  EXPECT_EQ(cl::count_spanning_trees(g), oracle::grid_dimers(6, 8));
  EXPECT_EQ(cl::count_spanning_trees(g), 167089);
}

TEST(EdgeStatus, AllAllowedOnElementaryGraphs) {
  const auto b = trefoil_gamma();
  const auto ms = cl::enumerate_matchings(b);
  const auto st = cl::edge_status(b, ms);
  EXPECT_EQ(st.size(), 7u);
  EXPECT_TRUE(std::all_of(st.begin(), st.end(), [](cl::EdgeState s) { return s == cl::EdgeState::allowed; }));
  const auto sq = cl::grid_graph({1, 1});
  const auto sq_status = cl::edge_status(sq, cl::enumerate_matchings(sq));
  EXPECT_EQ(std::count(sq_status.begin(), sq_status.end(), cl::EdgeState::allowed), 4);
}

TEST(EdgeStatus, PerEdgeTestMatchesEnumeration) {
  for (const char* name : {"trefoil", "figure8", "abe6", "k11n157", "grid_3_5", "grid_5_5"}) {
    const auto b = cl::load_fixture(name).gamma();
    EXPECT_EQ(cl::edge_status(b), cl::edge_status(b, cl::enumerate_matchings(b))) << name;
  }
}

TEST(EdgeStatus, ForbiddenEdgeDetected) {
  // Square with a pendant path hanging off a white corner. w5 must take b4,
  // so the edge b4 - w1 is in no perfect matching.
  //   w3 - b2
  //   |    |
  //   b0 - w1 - b4 - w5
  const cl::PlaneGraph g({{0, 1}, {2, 1}, {2, 3}, {0, 3}, {4, 1}, {4, 5}},
                         {{0, 6}, {1, 9, 3}, {2, 4}, {5, 7}, {8, 10}, {11}});
  const cl::BalancedGraph b(g,
                            {cl::Color::black, cl::Color::white, cl::Color::black, cl::Color::white,
                             cl::Color::black, cl::Color::white},
                            g.face_of(6));
  const auto ms = cl::enumerate_matchings(b);
  EXPECT_EQ(ms.size(), 2u);
  const auto st = cl::edge_status(b, ms);
  EXPECT_EQ(std::count(st.begin(), st.end(), cl::EdgeState::forbidden), 1);
  EXPECT_EQ(st[4], cl::EdgeState::forbidden);
  EXPECT_EQ(st, cl::edge_status(b));
  EXPECT_FALSE(cl::is_elementary(b, ms));
}

TEST(Elementary, CorpusAndGrids) {
  EXPECT_TRUE(cl::is_elementary(cl::grid_graph({1, 1}), cl::enumerate_matchings(cl::grid_graph({1, 1}))));
  for (const char* name : {"trefoil", "figure8", "abe6", "k11n157", "grid_3_3", "grid_5_5"}) {
    const auto b = cl::load_fixture(name).gamma();
    EXPECT_TRUE(cl::is_elementary(b, cl::enumerate_matchings(b))) << name;
    EXPECT_TRUE(cl::is_elementary(b, cl::edge_status(b))) << name;
  }
}

TEST(Resonant, EveryFaceOfElementaryGraphs) {
  for (const char* name : {"trefoil", "figure8", "abe6", "k11n157", "grid_1_1", "grid_3_3"}) {
    const auto b = cl::load_fixture(name).gamma();
    const auto ms = cl::enumerate_matchings(b);
    for (cl::FaceId f = 0; f < b.graph().num_faces(); ++f) EXPECT_TRUE(cl::is_resonant(b, f, ms)) << name << " face " << f;
  }
}

TEST(Resonant, SquareAlternatesUnderBothMatchings) {
  const auto b = cl::grid_graph({1, 1});
  const auto ms = cl::enumerate_matchings(b);
  for (const auto& m : ms) {
    EXPECT_TRUE(cl::alternates_on(b, b.squares()[0], m));
    EXPECT_TRUE(cl::alternates_on(b, b.outer_face(), m));
  }
}

TEST(Resonant, GridPeripheryWitness) {
  const auto b = cl::grid_graph({3, 3});
  const auto ms = cl::enumerate_matchings(b);
  const auto witness = std::count_if(ms.begin(), ms.end(), [&](const cl::Matching& m) { return cl::alternates_on(b, b.outer_face(), m); });
  EXPECT_GE(witness, 1);
  EXPECT_TRUE(cl::is_resonant(b, b.outer_face(), ms));
}

TEST(Tutte, SingleVertexDeletion) {
  EXPECT_TRUE(cl::single_vertex_tutte_holds(cl::grid_graph({3, 3}).graph()));
  // Star with three leaves: deleting the centre leaves three odd components.
  const cl::PlaneGraph star({{0, 1}, {0, 2}, {0, 3}}, {{0, 2, 4}, {1}, {3}, {5}});
  EXPECT_FALSE(cl::single_vertex_tutte_holds(star));
}
