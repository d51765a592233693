#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "clocklattice/diagram.hpp"
#include "clocklattice/error.hpp"
#include "clocklattice/generators.hpp"
#include "clocklattice/matchings.hpp"

namespace cl = clocklattice;

TEST(Grid, Shapes) {
  struct Case {
    cl::GridSpec spec;
    int vertices, edges, squares;
  };
  for (const auto& [spec, v, e, s] : {Case{{1, 1}, 4, 4, 1}, Case{{3, 3}, 16, 24, 9}, Case{{3, 5}, 24, 38, 15}, Case{{5, 7}, 48, 82, 35}}) {
    const auto b = cl::grid_graph(spec);
    EXPECT_EQ(b.num_vertices(), v);
    EXPECT_EQ(b.num_edges(), e);
    EXPECT_EQ(static_cast<int>(b.squares().size()), s);
    EXPECT_EQ(b.size() * 2, v);
    EXPECT_EQ(b.color(0), cl::Color::black);
  }
}

TEST(Grid, PositionsAreRowMajor) {
  const auto pos = cl::grid_positions({3, 5});
  ASSERT_EQ(pos.size(), 24u);
  EXPECT_EQ(pos[0], (cl::Point{0, 0}));
  EXPECT_EQ(pos[5], (cl::Point{5, 0}));
  EXPECT_EQ(pos[6], (cl::Point{0, 1}));
  EXPECT_EQ(pos[23], (cl::Point{5, 3}));
}

TEST(Grid, EvenSidesRejected) {
  for (const auto& spec : {cl::GridSpec{2, 3}, cl::GridSpec{3, 4}, cl::GridSpec{2, 2}}) {
    try {
      cl::grid_graph(spec);
      ADD_FAILURE() << "even grid accepted";
    } catch (const cl::Error& e) {
      EXPECT_EQ(e.kind(), cl::ErrorKind::EvenDimension);
    }
    EXPECT_THROW(cl::grid_height_closed_form(spec), cl::Error);
  }
  EXPECT_THROW(cl::grid_graph({0, 1}), cl::Error);
  EXPECT_THROW(cl::grid_graph({-1, 3}), cl::Error);
}

TEST(Grid, ClosedForm) {
  EXPECT_EQ(cl::grid_height_closed_form({1, 1}), 1);
  EXPECT_EQ(cl::grid_height_closed_form({3, 3}), 10);
  EXPECT_EQ(cl::grid_height_closed_form({5, 5}), 35);
  EXPECT_EQ(cl::grid_height_closed_form({3, 5}), 18);
  EXPECT_EQ(cl::grid_height_closed_form({5, 7}), 53);
  // Square grids give tetrahedral numbers m(m+1)(m+2)/6.
  for (int m = 1; m <= 15; m += 2) EXPECT_EQ(cl::grid_height_closed_form({m, m}), m * (m + 1) * (m + 2) / 6);
}

TEST(Grid, NameParsing) {
  const auto g = cl::parse_grid_name("grid_3_5");
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(g->m, 3);
  EXPECT_EQ(g->n, 5);
  for (const char* bad : {"grid_3", "grid__5", "grid_3_x", "trefoil", "grid_3_5_7", "grid_3_"}) {
    EXPECT_FALSE(cl::parse_grid_name(bad).has_value()) << bad;
  }
}

TEST(Braid, ClosuresOfKnownWords) {
  const auto trefoil = cl::braid_closure({1, 1, 1}, 2);
  EXPECT_EQ(trefoil.num_crossings(), 3);
  EXPECT_TRUE(cl::isomorphic(trefoil, cl::parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")));
  const auto f8 = cl::braid_closure({1, -2, 1, -2}, 3);
  EXPECT_EQ(f8.num_crossings(), 4);
  EXPECT_EQ(f8.num_faces(), 6);
  EXPECT_TRUE(cl::isomorphic(f8, *cl::load_fixture("figure8").universe));
  // A single crossing on two strands closes to a curl.
  EXPECT_EQ(cl::detect_nugatory(cl::braid_closure({1}, 2)), std::vector<int>{0});
}

TEST(Braid, InvalidWords) {
  EXPECT_THROW(cl::braid_closure({}, 3), cl::Error);
  EXPECT_THROW(cl::braid_closure({3}, 3), cl::Error);
  EXPECT_THROW(cl::braid_closure({1}, 1), cl::Error);
}

TEST(Braid, RandomWordsUseEveryGenerator) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = cl::random_braid_word(rng, 4, 8);
    EXPECT_EQ(w.size(), 8u);
    for (int g = 1; g <= 3; ++g) EXPECT_NE(std::find(w.begin(), w.end(), g), w.end());
    EXPECT_NO_THROW(cl::braid_closure(w, 4));
  }
  std::mt19937_64 a(11), b(11);
  EXPECT_EQ(cl::random_braid_word(a, 3, 6), cl::random_braid_word(b, 3, 6));
  EXPECT_THROW(cl::random_braid_word(a, 5, 3), cl::Error);
}

TEST(Fixtures, NamesAndFiles) {
  const auto names = cl::fixture_names();
  for (const char* want : {"abe6", "curl", "figure8", "granny_shadow", "k11n157", "trefoil"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  }
  try {
    cl::load_fixture("no_such_knot");
    ADD_FAILURE() << "unknown fixture loaded";
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.kind(), cl::ErrorKind::UnknownFixture);
  }
  EXPECT_THROW(cl::fixture_file("missing.json"), cl::Error);
}

TEST(Fixtures, ChecksumsAreLocked) {
  const std::map<std::string, std::uint64_t> expected{
      {"abe6.gamma.json", 0x1f32869ec8f0f5b3ull},    {"curl.json", 0x40ae2d40a59b8ae8ull},
      {"figure8.json", 0x50dacf955b535f50ull},       {"granny_shadow.json", 0x70e54f6f13b3a544ull},
      {"k11n157.gamma.json", 0x97e603523655b032ull}, {"trefoil.json", 0xa334ca210bbc76f5ull},
  };
  EXPECT_EQ(cl::fixture_files().size(), expected.size());
  for (const auto& [file, hash] : expected) EXPECT_EQ(cl::fnv1a64(cl::fixture_file(file)), hash) << file;
}

TEST(Fixtures, HashFunction) {
  EXPECT_EQ(cl::fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(cl::fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Fixtures, Contents) {
  const auto trefoil = cl::load_fixture("trefoil");
  EXPECT_EQ(trefoil.universe->num_crossings(), 3);
  EXPECT_FALSE(trefoil.drawn.has_value());

  const auto k11 = cl::load_fixture("k11n157");
  ASSERT_TRUE(k11.drawn.has_value());
  EXPECT_EQ(k11.drawn->blacks().size(), 11u);
  EXPECT_EQ(k11.drawn->whites().size(), 11u);
  EXPECT_EQ(k11.positions.size(), 22u);

  const auto abe = cl::load_fixture("abe6");
  EXPECT_EQ(abe.universe->num_crossings(), 6);
  // The transcribed drawing has 13 states; see the README for the count.
  EXPECT_EQ(cl::enumerate_matchings(abe.gamma()).size(), 13u);
  EXPECT_EQ(cl::enumerate_matchings(*abe.drawn).size(), 13u);

  const auto grid = cl::load_fixture("grid_3_3");
  ASSERT_TRUE(grid.universe.has_value());
  EXPECT_EQ(grid.universe->num_crossings(), 8);
  EXPECT_EQ(grid.positions.size(), 16u);
}

TEST(Fixtures, DrawnAndUniverseGammaAgree) {
  for (const char* name : {"abe6", "k11n157", "grid_3_5"}) {
    const auto fx = cl::load_fixture(name);
    const auto g = fx.gamma();
    const auto ca = g.colors();
    const auto cb = fx.drawn->colors();
    EXPECT_TRUE(cl::plane_isomorphism(g.graph(), fx.drawn->graph(), &ca, &cb).has_value()) << name;
  }
}
