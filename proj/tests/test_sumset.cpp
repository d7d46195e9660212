#include "mstd/affine.hpp"
#include "mstd/errors.hpp"
#include "mstd/sumset.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mstd;
using testing_support::to_oracle;
using testing_support::to_set;

TEST(Sumset, ConwaySet) {
    auto a = PointSet::of({0, 2, 3, 4, 7, 11, 12, 14});
    EXPECT_EQ(minkowski_sum(a, a).size(), 26U);
    EXPECT_EQ(iterated_sumdiff(a, {1, 1}).size(), 25U);
}

TEST(Sumset, MatchesOracleOnRandomSets) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 1 + trial % 3;
        const std::int64_t side = dim == 1 ? 150 : (dim == 2 ? 20 : 7);
        const double p = (trial % 4 + 1) * 0.2;
        const auto ra = oracle::random_set(rng, dim, side, p);
        const auto rb = oracle::random_set(rng, dim, side / 2 + 1, 1.0 - p / 2);
        const auto got = minkowski_sum(to_set(ra, dim), to_set(rb, dim));
        EXPECT_EQ(to_oracle(got), oracle::sum(ra, rb)) << "trial " << trial;
    }
}

TEST(Sumset, SparseOperands) {
    std::mt19937_64 rng(3);
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        const auto ra = oracle::random_sparse(rng, dim, 30, 1000000);
        const auto rb = oracle::random_set(rng, dim, 5, 0.5);
        const auto a = to_set(ra, dim);
        EXPECT_EQ(a.backend(), Backend::sparse);
        EXPECT_EQ(to_oracle(minkowski_sum(a, to_set(rb, dim))), oracle::sum(ra, rb));
        EXPECT_EQ(to_oracle(minkowski_sum(a, a)), oracle::sum(ra, ra));
    }
}

TEST(Sumset, LongRowsCrossWordBoundaries) {
    // Runs of many lengths in rows wider than several words.
    std::mt19937_64 rng(5);
    const auto ra = oracle::random_set(rng, 2, 300, 0.7);
    oracle::Set rb;
    for (std::int64_t x = 0; x < 200; ++x) {
        if (x % 37 != 5 && x % 61 != 0) {
            rb.insert({x % 3, x});
        }
    }
    EXPECT_EQ(to_oracle(minkowski_sum(to_set(ra, 2), to_set(rb, 2))), oracle::sum(ra, rb));
}

TEST(Sumset, Commutative) {
    std::mt19937_64 rng(9);
    const auto a = to_set(oracle::random_set(rng, 2, 30, 0.3), 2);
    const auto b = to_set(oracle::random_sparse(rng, 2, 50, 40), 2);
    EXPECT_EQ(minkowski_sum(a, b), minkowski_sum(b, a));
}

TEST(Sumset, DoublingMatchesNaiveAndOracle) {
    std::mt19937_64 rng(13);
    for (unsigned s = 0; s <= 4; ++s) {
        for (unsigned d = 0; d <= 3; ++d) {
            if (s + d == 0) {
                continue;
            }
            const std::size_t dim = 1 + (s + d) % 2;
            const auto ra = oracle::random_set(rng, dim, dim == 1 ? 25 : 6, 0.4);
            const auto a = to_set(ra, dim);
            const auto fast = iterated_sumdiff(a, {s, d});
            EXPECT_EQ(fast, iterated_sumdiff_naive(a, {s, d}));
            EXPECT_EQ(to_oracle(fast), oracle::sumdiff(ra, s, d)) << s << "," << d;
        }
    }
}

TEST(Sumset, MirroredSpecHasSameSize) {
    std::mt19937_64 rng(17);
    const auto a = to_set(oracle::random_set(rng, 2, 12, 0.4), 2);
    for (unsigned s = 0; s <= 3; ++s) {
        for (unsigned d = 0; d <= 3; ++d) {
            if (s + d == 0) {
                continue;
            }
            SumDiffSpec spec{s, d};
            EXPECT_EQ(iterated_sumdiff(a, spec), negate(iterated_sumdiff(a, spec.mirrored())));
        }
    }
}

TEST(Sumset, TranslationAndAffineInvariance) {
    std::mt19937_64 rng(19);
    const auto a = to_set(oracle::random_set(rng, 2, 15, 0.35), 2);
    const std::vector<Coord> t{-40, 17};
    const auto shifted = translate(a, t);
    EXPECT_EQ(shifted.min_corner()[0], a.min_corner()[0] - 40);
    const auto m = IntegerAffineMap({{2, 3}, {1, 2}}, {5, -1});
    const auto image = apply_affine(a, m);
    for (SumDiffSpec spec : {SumDiffSpec{2, 0}, SumDiffSpec{1, 1}, SumDiffSpec{2, 1}}) {
        const auto base = iterated_sumdiff(a, spec).size();
        EXPECT_EQ(iterated_sumdiff(shifted, spec).size(), base);
        EXPECT_EQ(iterated_sumdiff(image, spec).size(), base);
    }
}

TEST(Sumset, NegateAndDilate) {
    std::mt19937_64 rng(23);
    const auto ra = oracle::random_set(rng, 3, 6, 0.5);
    const auto a = to_set(ra, 3);
    EXPECT_EQ(to_oracle(negate(a)), oracle::neg(ra));
    EXPECT_EQ(negate(negate(a)), a);
    const auto d3 = dilate(PointSet::of({0, 1, 4}), 3);
    EXPECT_EQ(d3, PointSet::of({0, 3, 12}));
    EXPECT_THROW(dilate(d3, 0), ArgumentError);
}

TEST(Sumset, Errors) {
    const auto a = PointSet::of({1, 2});
    const auto b = PointSet::of({LatticePoint{1, 2}});
    EXPECT_THROW(minkowski_sum(a, b), DimensionError);
    EXPECT_THROW(minkowski_sum(a, PointSet::from_points(1, {})), EmptySetError);
    EXPECT_THROW(iterated_sumdiff(a, {0, 0}), ArgumentError);
    EXPECT_THROW(minkowski_sum(PointSet::of({kCoordLimit - 1}), PointSet::of({1})), ArgumentError);
}

TEST(Sumset, BoundingBox) {
    const auto [lo, hi] = bounding_box(PointSet::of({LatticePoint{3, -1}, LatticePoint{-2, 4}}));
    EXPECT_EQ(lo, (LatticePoint{-2, -1}));
    EXPECT_EQ(hi, (LatticePoint{3, 4}));
}

TEST(Affine, DeterminantAndShear) {
    EXPECT_EQ(IntegerAffineMap({{2, 3}, {1, 2}}).determinant(), 1);
    EXPECT_EQ(IntegerAffineMap({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}).determinant(), -5);
    EXPECT_EQ(IntegerAffineMap({{1, 2}, {2, 4}}).determinant(), 0);
    const std::vector<Coord> slopes{7};
    const auto s = IntegerAffineMap::shear(2, slopes);
    EXPECT_EQ(s(std::vector<Coord>{1, 2}), (std::vector<Coord>{15, 2}));
    EXPECT_THROW(apply_affine(PointSet::of({LatticePoint{0, 0}}), IntegerAffineMap({{1, 2}, {2, 4}})),
                 SingularMapError);
    EXPECT_NO_THROW(apply_affine(PointSet::of({LatticePoint{0, 0}}), IntegerAffineMap({{1, 2}, {2, 4}}),
                                 Injectivity::not_required));
}
