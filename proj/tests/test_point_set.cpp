#include "mstd/errors.hpp"
#include "mstd/point_set.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mstd;
using testing_support::to_oracle;
using testing_support::to_set;

TEST(PointSet, DeduplicatesAndSorts) {
    auto s = PointSet::of({5, 1, 3, 1, 5});
    EXPECT_EQ(s.size(), 3U);
    EXPECT_EQ(s.flat(), (std::vector<Coord>{1, 3, 5}));
    EXPECT_EQ(s.min_corner()[0], 1);
    EXPECT_EQ(s.max_corner()[0], 5);
}

TEST(PointSet, LexicographicOrderIn2D) {
    auto s = PointSet::of({LatticePoint{1, 0}, LatticePoint{0, 5}, LatticePoint{0, -1}});
    const auto pts = s.points();
    ASSERT_EQ(pts.size(), 3U);
    EXPECT_EQ(pts[0], (LatticePoint{0, -1}));
    EXPECT_EQ(pts[1], (LatticePoint{0, 5}));
    EXPECT_EQ(pts[2], (LatticePoint{1, 0}));
}

TEST(PointSet, BackendFollowsDensity) {
    EXPECT_EQ(PointSet::interval(0, 99).backend(), Backend::dense);
    EXPECT_EQ(PointSet::of({0, 1000000}).backend(), Backend::sparse);
    // 2 points in a box of 128 cells: exactly at the 1/64 boundary.
    EXPECT_EQ(PointSet::of({0, 127}).backend(), Backend::dense);
    EXPECT_EQ(PointSet::of({0, 128}).backend(), Backend::sparse);
}

TEST(PointSet, BackendsAgree) {
    std::mt19937_64 rng(7);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        for (double p : {0.005, 0.3, 0.9}) {
            const auto ref = oracle::random_set(rng, dim, dim == 1 ? 300 : (dim == 2 ? 40 : 9), p);
            const auto s = to_set(ref, dim);
            EXPECT_EQ(to_oracle(s), ref);
            EXPECT_EQ(s.size(), ref.size());
            for (const auto& q : ref) {
                EXPECT_TRUE(s.contains(std::span<const Coord>(q)));
            }
        }
    }
}

TEST(PointSet, ContainsRejectsOutside) {
    auto s = PointSet::of({LatticePoint{0, 0}, LatticePoint{3, 4}});
    EXPECT_TRUE(s.contains(LatticePoint{3, 4}));
    EXPECT_FALSE(s.contains(LatticePoint{3, 3}));
    EXPECT_FALSE(s.contains(LatticePoint{-1, 0}));
    EXPECT_THROW(s.contains(LatticePoint{1}), DimensionError);
}

TEST(PointSet, EqualityAcrossBackends) {
    DenseGrid g({-2, -2}, {10, 10});
    g.set({0, 0});
    g.set({1, 1});
    auto dense = PointSet::from_grid(g);
    auto sparse = PointSet::of({LatticePoint{1, 1}, LatticePoint{0, 0}});
    EXPECT_EQ(dense, sparse);
    EXPECT_EQ(dense.min_corner()[0], 0);
    EXPECT_NE(dense, PointSet::of({LatticePoint{1, 1}, LatticePoint{0, 1}}));
}

TEST(PointSet, GridFillClips) {
    DenseGrid g({0, 0, 0}, {4, 5, 6});
    g.fill({-3, 1, 2}, {1, 2, 100});
    EXPECT_EQ(g.count(), 2U * 2U * 4U);
    EXPECT_TRUE(g.test(std::vector<Coord>{1, 2, 5}));
    EXPECT_FALSE(g.test(std::vector<Coord>{2, 2, 5}));
}

TEST(PointSet, CoordinateBound) {
    EXPECT_THROW(PointSet::of({kCoordLimit}), ArgumentError);
    EXPECT_NO_THROW(PointSet::of({kCoordLimit - 1, -(kCoordLimit - 1)}));
}

TEST(PointSet, EmptyBehaviour) {
    auto e = PointSet::from_points(2, {});
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(e.dimension(), 2U);
    EXPECT_THROW(e.min_corner(), EmptySetError);
    EXPECT_THROW(PointSet::from_points(std::span<const LatticePoint>{}), EmptySetError);
}

TEST(PointSet, MixedDimensionsRejected) {
    EXPECT_THROW(PointSet::of({LatticePoint{1, 2}, LatticePoint{1}}), DimensionError);
    EXPECT_THROW(PointSet::from_points(2, {1, 2, 3}), DimensionError);
}
