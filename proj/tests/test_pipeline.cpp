#include <gtest/gtest.h>

#include "clocklattice/error.hpp"
#include "clocklattice/pipeline.hpp"

namespace cl = clocklattice;

TEST(Instance, FromText) {
  const auto pd = cl::instance_from_text("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  ASSERT_TRUE(pd.universe.has_value());
  EXPECT_EQ(pd.gamma.size(), 3);

  const auto uj = cl::instance_from_text(R"({"label": "t", "crossings": [[1,4,2,5],[3,6,4,1],[5,2,6,3]]})");
  EXPECT_EQ(uj.label, "t");
  EXPECT_EQ(uj.gamma.size(), 3);

  const auto bj = cl::instance_from_text(cl::serialize_balanced_json(cl::grid_graph({3, 3}), "g", cl::grid_positions({3, 3})));
  EXPECT_FALSE(bj.universe.has_value());
  EXPECT_EQ(bj.gamma.size(), 8);
  EXPECT_EQ(bj.positions.size(), 16u);

  EXPECT_THROW(cl::instance_from_text("X[1,2"), cl::Error);
}

TEST(Instance, ExplicitStarsOverrideAuto) {
  const auto a = cl::instance_from_fixture("trefoil");
  EXPECT_EQ(a.gamma.stars(), (cl::StarPair{0, 1}));
  int overridden = 0;
  for (int f = 2; f < 5; ++f) {
    try {
      const auto b = cl::instance_from_fixture("trefoil", cl::StarPair{0, f});
      EXPECT_EQ(b.gamma.stars(), (cl::StarPair{0, f}));
      EXPECT_EQ(b.gamma.size(), 3);
      ++overridden;
    } catch (const cl::Error& e) {
      EXPECT_EQ(e.kind(), cl::ErrorKind::StarsNotAdjacent);
    }
  }
  EXPECT_GT(overridden, 0);
  EXPECT_THROW(cl::instance_from_fixture("figure8", cl::StarPair{0, 0}), cl::Error);
}

TEST(Instance, FixturesCarryPositions) {
  for (const char* name : {"abe6", "k11n157", "grid_5_5"}) {
    const auto inst = cl::instance_from_fixture(name);
    EXPECT_EQ(static_cast<int>(inst.positions.size()), inst.gamma.num_vertices()) << name;
  }
  EXPECT_TRUE(cl::instance_from_fixture("figure8").positions.empty());
  EXPECT_TRUE(cl::instance_from_fixture("grid_3_5").grid.has_value());
}

TEST(Strict, RejectsOutsideHypotheses) {
  EXPECT_NO_THROW(cl::require_strict(cl::instance_from_fixture("k11n157")));
  try {
    cl::require_strict(cl::instance_from_fixture("curl"));
    ADD_FAILURE();
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.kind(), cl::ErrorKind::NugatoryPresent);
  }
  try {
    cl::require_strict(cl::instance_from_fixture("granny_shadow", cl::StarPair{2, 3}));
    ADD_FAILURE();
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.kind(), cl::ErrorKind::NotPrimeLike);
  }
}

TEST(HeightRoutes, AllAgreeOnGrids) {
  for (const auto& [name, h] : std::vector<std::pair<const char*, int>>{{"grid_1_1", 1}, {"grid_3_3", 10}, {"grid_3_5", 18}, {"grid_5_5", 35}}) {
    const auto r = cl::compute_height_routes(cl::instance_from_fixture(name));
    EXPECT_TRUE(r.agree()) << name;
    ASSERT_TRUE(r.bfs && r.peel_height && r.closed_form) << name;
    EXPECT_EQ(*r.bfs, h);
    EXPECT_EQ(r.symdiff_height, h);
    EXPECT_EQ(*r.peel_height, h);
    EXPECT_EQ(*r.closed_form, h);
    EXPECT_EQ(r.height(), h);
  }
}

TEST(HeightRoutes, LargeGridSkipsEnumeration) {
  const auto r = cl::compute_height_routes(cl::instance_from_fixture("grid_5_7"));
  EXPECT_FALSE(r.bfs.has_value());
  EXPECT_FALSE(r.bfs_skipped.empty());
  EXPECT_EQ(r.symdiff_height, 53);
  EXPECT_EQ(r.peel_height, 53);
  EXPECT_EQ(r.closed_form, 53);
  EXPECT_TRUE(r.agree());
  EXPECT_EQ(r.height(), 53);
}

TEST(HeightRoutes, CurlSkipsPeeling) {
  const auto r = cl::compute_height_routes(cl::instance_from_fixture("curl"));
  EXPECT_FALSE(r.peel.has_value());
  EXPECT_FALSE(r.peel_skipped.empty());
  EXPECT_EQ(r.bfs, 0);
  EXPECT_EQ(r.symdiff_height, 0);
}

TEST(BuildLattice, CapPropagates) {
  EXPECT_EQ(cl::build_lattice(cl::grid_graph({3, 3})).height, 10);
  try {
    cl::build_lattice(cl::grid_graph({3, 3}), 5);
    ADD_FAILURE();
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.kind(), cl::ErrorKind::CapExceeded);
  }
}
