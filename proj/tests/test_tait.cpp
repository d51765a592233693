#include <gtest/gtest.h>

#include <algorithm>

#include "clocklattice/diagram.hpp"
#include "clocklattice/error.hpp"
#include "clocklattice/generators.hpp"
#include "clocklattice/tait.hpp"

namespace cl = clocklattice;

namespace {

constexpr const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
constexpr const char* kTrefoilWithKink = "X[1,4,2,5] X[3,6,4,8] X[5,2,6,3] X[1,7,7,8]";

int count(const cl::FaceColoring& c, cl::Color x) { return static_cast<int>(std::count(c.begin(), c.end(), x)); }

}  // namespace

TEST(Checkerboard, AdjacentFacesDiffer) {
  for (const char* pd : {kTrefoil, "X[1,1,2,2]", kTrefoilWithKink}) {
    const auto u = cl::parse_pd(pd);
    const auto col = cl::checkerboard(u, 0);
    EXPECT_EQ(col[0], cl::Color::black);
    for (int c = 0; c < u.num_crossings(); ++c) {
      for (int s = 0; s < 4; ++s) EXPECT_NE(col[u.face_at(c, s)], col[u.face_at(c, s + 1)]) << pd;
    }
  }
}

TEST(Checkerboard, TrefoilSplitsTwoAndThree) {
  const auto col = cl::checkerboard(cl::parse_pd(kTrefoil), 0);
  const int black = count(col, cl::Color::black);
  EXPECT_EQ(std::min(black, 5 - black), 2);
  EXPECT_EQ(cl::checkerboard(cl::parse_pd("X[1,1,2,2]"), 0).size(), 3u);
}

TEST(BuildTait, TrefoilTriangleAndTheta) {
  const auto u = cl::parse_pd(kTrefoil);
  const auto [g, dual] = cl::build_tait(u, cl::checkerboard(u, 0));
  std::vector<std::pair<int, int>> shapes{{g.graph.num_vertices(), g.graph.num_edges()},
                                          {dual.graph.num_vertices(), dual.graph.num_edges()}};
  std::sort(shapes.begin(), shapes.end());
  EXPECT_EQ(shapes, (std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}));
  const auto& triangle = g.graph.num_vertices() == 3 ? g.graph : dual.graph;
  EXPECT_TRUE(cl::is_two_connected(triangle));
  EXPECT_TRUE(cl::bridges(triangle).empty());
}

TEST(BuildTait, CurlGivesLoopOrBridge) {
  const auto u = cl::parse_pd("X[1,1,2,2]");
  const auto [g, dual] = cl::build_tait(u, cl::checkerboard(u, 0));
  auto has_loop = [](const cl::PlaneGraph& x) {
    for (cl::EdgeId e = 0; e < x.num_edges(); ++e) {
      if (x.endpoints(e)[0] == x.endpoints(e)[1]) return true;
    }
    return false;
  };
  EXPECT_TRUE(has_loop(g.graph) || !cl::bridges(g.graph).empty());
  EXPECT_TRUE(has_loop(dual.graph) || !cl::bridges(dual.graph).empty());
}

TEST(BuildTait, ConnectedSumHasCutVertex) {
  const auto u = *cl::load_fixture("granny_shadow").universe;
  const auto [g, dual] = cl::build_tait(u, cl::checkerboard(u, 0));
  EXPECT_FALSE(cl::articulation_points(g.graph).empty() && cl::articulation_points(dual.graph).empty());
  EXPECT_EQ(g.graph.num_edges(), 6);
  EXPECT_EQ(dual.graph.num_edges(), 6);
}

TEST(BuildTait, EdgesAreCrossingsAndVerticesAreFaces) {
  const auto u = cl::parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
  const auto col = cl::checkerboard(u, 0);
  const auto [g, dual] = cl::build_tait(u, col);
  EXPECT_EQ(g.graph.num_edges(), u.num_crossings());
  EXPECT_EQ(g.graph.num_vertices() + dual.graph.num_vertices(), u.num_faces());
  for (cl::VertexId v = 0; v < g.graph.num_vertices(); ++v) {
    EXPECT_EQ(col[g.face_of_vertex[v]], cl::Color::black);
    EXPECT_EQ(g.vertex_of_face[g.face_of_vertex[v]], v);
  }
  // Every crossing joins the two black faces at opposite corners.
  for (int c = 0; c < u.num_crossings(); ++c) {
    const auto [a, b] = g.graph.endpoints(c);
    std::vector<cl::FaceId> got{g.face_of_vertex[a], g.face_of_vertex[b]};
    std::vector<cl::FaceId> want;
    for (int s = 0; s < 4; ++s) {
      if (col[u.face_at(c, s)] == cl::Color::black) want.push_back(u.face_at(c, s));
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << "crossing " << c;
  }
}

TEST(BuildOverlaid, Counts) {
  struct Case {
    const char* pd;
    int vertices, edges;
  };
  for (const auto& [pd, vertices, edges] : {Case{kTrefoil, 8, 12}, Case{"X[1,1,2,2]", 4, 4}}) {
    const auto u = cl::parse_pd(pd);
    const auto hat = cl::build_overlaid(u);
    EXPECT_EQ(hat.graph.num_vertices(), vertices);
    EXPECT_EQ(hat.graph.num_edges(), edges);
    EXPECT_EQ(hat.graph.num_faces(), 2 * u.num_crossings());
    for (cl::FaceId f = 0; f < hat.graph.num_faces(); ++f) EXPECT_EQ(hat.graph.face_length(f), 4);
  }
  const auto k11 = cl::build_overlaid(*cl::load_fixture("k11n157").universe);
  EXPECT_EQ(k11.graph.num_vertices(), 24);
  EXPECT_EQ(k11.graph.num_edges(), 44);
  EXPECT_EQ(k11.num_crossings, 11);
}

TEST(BuildOverlaid, EdgeIsCorner) {
  const auto u = cl::parse_pd(kTrefoil);
  const auto hat = cl::build_overlaid(u);
  for (int c = 0; c < u.num_crossings(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const auto ends = hat.graph.endpoints(4 * c + s);
      EXPECT_TRUE((ends == std::array<cl::VertexId, 2>{hat.crossing_vertex(c), hat.face_vertex(u.face_at(c, s))}));
    }
  }
}

TEST(BuildBalanced, TrefoilOuterTriangleAndBigon) {
  const auto u = cl::parse_pd(kTrefoil);
  cl::FaceId tri = -1;
  for (const auto& f : u.faces()) {
    if (f.degree() == 3) tri = f.id;
  }
  cl::FaceId bigon = -1;
  for (const auto& f : u.faces()) {
    if (f.degree() == 2 && u.faces_adjacent(tri, f.id)) bigon = f.id;
  }
  ASSERT_GE(bigon, 0);
  const auto b = cl::build_balanced(u, {tri, bigon});
  EXPECT_EQ(b.size(), 3);
  EXPECT_EQ(b.whites().size(), 3u);
  EXPECT_EQ(b.num_edges(), 7);
  EXPECT_EQ(b.squares().size(), 2u);
}

TEST(BuildBalanced, ElevenCrossingFixture) {
  const auto fx = cl::load_fixture("k11n157");
  const auto b = fx.gamma();
  EXPECT_EQ(b.size(), 11);
  EXPECT_EQ(b.num_edges(), 36);
  EXPECT_EQ(b.squares().size(), 15u);
  EXPECT_EQ(fx.drawn->squares().size(), 15u);
}

TEST(BuildBalanced, NonAdjacentStarsRejected) {
  const auto u = cl::parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
  for (cl::FaceId j = 1; j < u.num_faces(); ++j) {
    if (u.faces_adjacent(0, j)) continue;
    try {
      cl::build_balanced(u, {0, j});
      ADD_FAILURE() << "accepted non-adjacent stars 0," << j;
    } catch (const cl::Error& e) {
      EXPECT_EQ(e.kind(), cl::ErrorKind::StarsNotAdjacent);
    }
  }
}

TEST(BuildBalanced, StarredFacesAreGone) {
  const auto u = cl::parse_pd(kTrefoil);
  const cl::StarPair stars = cl::auto_stars(u);
  const auto b = cl::build_balanced(u, stars);
  for (cl::VertexId w : b.whites()) {
    EXPECT_NE(b.labels()[w], stars.first);
    EXPECT_NE(b.labels()[w], stars.second);
  }
  EXPECT_EQ(b.stars(), stars);
}

TEST(Periphery, TrefoilValences) {
  const auto u = cl::parse_pd(kTrefoil);
  const auto r = cl::check_periphery(cl::build_balanced(u, cl::auto_stars(u)));
  EXPECT_EQ(r.n2(), 2);
  EXPECT_EQ(r.n3(), 1);
  EXPECT_EQ(r.n4(), 0);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.two_valent_blacks.size(), 2u);
}

TEST(Periphery, GridCornersAreTheTwoValentBlacks) {
  for (const auto& spec : {cl::GridSpec{3, 3}, cl::GridSpec{3, 5}, cl::GridSpec{5, 5}}) {
    const auto b = cl::grid_graph(spec);
    const auto r = cl::check_periphery(b);
    const cl::VertexId far = spec.m * (spec.n + 1) + spec.n;
    EXPECT_EQ(r.two_valent_blacks, (std::vector<cl::VertexId>{0, far}));
    EXPECT_EQ(r.off_periphery[4], (spec.m - 1) * (spec.n - 1) / 2);
  }
}

TEST(Periphery, PeripheryWalksCounterclockwise) {
  const auto b = cl::grid_graph({1, 1});
  // Vertices 0 (0,0), 1 (1,0), 2 (0,1), 3 (1,1): counterclockwise from 0.
  EXPECT_EQ(b.periphery(), (std::vector<cl::VertexId>{0, 1, 3, 2}));
}

TEST(Periphery, CurlBearingDiagramViolates) {
  const auto u = cl::parse_pd(kTrefoilWithKink);
  bool violated = false;
  for (cl::FaceId i = 0; i < u.num_faces(); ++i) {
    for (cl::FaceId j = i + 1; j < u.num_faces(); ++j) {
      if (!u.faces_adjacent(i, j)) continue;
      try {
        const auto b = cl::build_balanced(u, {i, j});
        const auto r = cl::periphery_report(b);
        if (!r.ok()) {
          violated = true;
          EXPECT_TRUE(r.offending_vertex.has_value());
          try {
            cl::check_periphery(b);
            ADD_FAILURE() << "no violation raised";
          } catch (const cl::PeripheryViolation& e) {
            EXPECT_EQ(e.vertex(), *r.offending_vertex);
          }
        }
      } catch (const cl::Error&) {
        violated = true;
      }
    }
  }
  EXPECT_TRUE(violated);
}

TEST(Reconstruct, TrefoilRoundTrip) {
  const auto u = cl::parse_pd(kTrefoil);
  const auto stars = cl::auto_stars(u);
  const auto rebuilt = cl::reconstruct_universe(cl::build_balanced(u, stars));
  EXPECT_EQ(rebuilt.universe.num_crossings(), 3);
  EXPECT_EQ(rebuilt.universe.num_faces(), 5);
  EXPECT_TRUE(cl::isomorphic(u, rebuilt.universe));
  EXPECT_TRUE(rebuilt.universe.faces_adjacent(rebuilt.stars.first, rebuilt.stars.second));
}

TEST(Reconstruct, GridGivesEightCrossingShadow) {
  // The 4 x 4 vertex grid has 8 black vertices, one per crossing.
  const auto rebuilt = cl::reconstruct_universe(cl::grid_graph({3, 3}));
  EXPECT_EQ(rebuilt.universe.num_crossings(), 8);
  EXPECT_EQ(rebuilt.universe.num_faces(), 10);
  EXPECT_TRUE(cl::detect_nugatory(rebuilt.universe).empty());
  // Rebuilding Γ from the recovered universe gives the grid back.
  const auto again = cl::build_balanced(rebuilt.universe, rebuilt.stars);
  const auto grid = cl::grid_graph({3, 3});
  const auto ca = again.colors();
  const auto cb = grid.colors();
  EXPECT_TRUE(cl::plane_isomorphism(again.graph(), grid.graph(), &ca, &cb).has_value());
}

TEST(BalancedGraph, RejectsMalformedInput) {
  const cl::PlaneGraph g({{0, 1}}, {{0}, {1}});
  EXPECT_THROW(cl::BalancedGraph(g, {cl::Color::black, cl::Color::black}, 0), cl::Error);
  EXPECT_THROW(cl::BalancedGraph(g, {cl::Color::black}, 0), cl::Error);
  const cl::PlaneGraph two({{0, 1}, {2, 3}}, {{0}, {1}, {2}, {3}});
  EXPECT_THROW(cl::BalancedGraph(two, {cl::Color::black, cl::Color::white, cl::Color::black, cl::Color::white}, 0),
               cl::Error);
  EXPECT_NO_THROW(cl::BalancedGraph(g, {cl::Color::black, cl::Color::white}, 0));
}
