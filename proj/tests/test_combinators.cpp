#include "mstd/analysis.hpp"
#include "mstd/combinators.hpp"
#include "mstd/errors.hpp"
#include "mstd/sumset.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace mstd;
using testing_support::to_oracle;
using testing_support::to_set;

TEST(BaseExpand, TrivialParts) {
    const PointSet origin = PointSet::of({LatticePoint{0, 0}});
    const std::vector<PointSet> parts{origin, origin};
    EXPECT_EQ(base_expand(parts, 1, 2), origin);
    EXPECT_EQ(base_expand(parts, 7, 2), origin);
}

TEST(BaseExpand, SmallProduct) {
    const auto a = PointSet::of({LatticePoint{0, 0}, LatticePoint{1, 0}, LatticePoint{0, 1}});
    const auto b = PointSet::of({LatticePoint{0, 0}, LatticePoint{2, 0}});
    const std::vector<PointSet> parts{a, b};
    EXPECT_EQ(minimal_base(parts, 2), 5);
    const auto c = base_expand(parts, 5, 2);
    EXPECT_EQ(c.size(), 6U);
    EXPECT_EQ(minkowski_sum(c, c).size(), 18U);
    EXPECT_EQ(oracle::sum(to_oracle(c), to_oracle(c)).size(), 18U);
}

TEST(BaseExpand, ConwayTimesPair) {
    const auto conway = PointSet::of({0, 2, 3, 4, 7, 11, 12, 14});
    const auto pair = PointSet::of({0, 1});
    const std::vector<PointSet> parts{conway, pair};
    const auto c = base_expand(parts, 29, 2);
    EXPECT_EQ(iterated_sumdiff(c, {2, 0}).size(), 26U * 3U);
    EXPECT_EQ(iterated_sumdiff(c, {1, 1}).size(), 25U * 3U);
}

TEST(BaseExpand, RejectsSmallBase) {
    const auto a = PointSet::of({0, 3});
    const std::vector<PointSet> parts{a, a};
    EXPECT_THROW(base_expand(parts, 6, 2), ArgumentError);
    EXPECT_NO_THROW(base_expand(parts, 7, 2));
    const std::vector<PointSet> negative{PointSet::of({-1, 2}), a};
    EXPECT_THROW(base_expand(negative, 100, 2), ArgumentError);
    const std::vector<PointSet> mixed{PointSet::of({LatticePoint{0, 1}}), a};
    EXPECT_THROW(base_expand(mixed, 100, 2), DimensionError);
}

TEST(BaseExpand, ProductLawOnRandomPairs) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ra = oracle::random_set(rng, 2, 4, 0.5);
        const auto rb = oracle::random_set(rng, 2, 4, 0.5);
        const std::vector<PointSet> parts{to_set(ra, 2), to_set(rb, 2)};
        const unsigned k = trial % 5 == 0 ? 3 : 2;
        const Coord m = minimal_base(parts, k);
        const auto c = base_expand(parts, m, k);
        EXPECT_EQ(c.size(), ra.size() * rb.size());
        for (unsigned s = 0; s <= k; ++s) {
            for (unsigned d = 0; s + d <= k; ++d) {
                if (s + d == 0) {
                    continue;
                }
                EXPECT_EQ(to_oracle(iterated_sumdiff(c, {s, d})).size(),
                          oracle::sumdiff(ra, s, d).size() * oracle::sumdiff(rb, s, d).size())
                    << "trial " << trial << " s=" << s << " d=" << d;
            }
        }
    }
}

TEST(BaseExpand, UniqueDecomposition) {
    std::mt19937_64 rng(31);
    const auto ra = oracle::random_set(rng, 2, 6, 0.6);
    const auto rb = oracle::random_set(rng, 2, 6, 0.6);
    const std::vector<PointSet> parts{to_set(ra, 2), to_set(rb, 2)};
    const Coord m = minimal_base(parts, 2);
    const auto c = base_expand(parts, m, 2);
    std::map<oracle::Point, int> hits;
    for (const auto& p : ra) {
        for (const auto& q : rb) {
            ++hits[{p[0] + m * q[0], p[1] + m * q[1]}];
        }
    }
    EXPECT_EQ(hits.size(), c.size());
    for (const auto& [pt, count] : hits) {
        EXPECT_EQ(count, 1);
        EXPECT_TRUE(c.contains(std::span<const Coord>(pt)));
    }
}

TEST(ChainSpec, Validation) {
    ChainSpec ok{{{2, {2, 0}, {1, 1}}, {3, {3, 0}, {2, 1}}}};
    EXPECT_NO_THROW(ok.validate(3));
    EXPECT_EQ(ok.top_level(), 3U);
    EXPECT_THROW(ok.validate(2), ArgumentError);
    ChainSpec same{{{2, {2, 0}, {0, 2}}}};
    EXPECT_THROW(same.validate(2), ArgumentError);
    ChainSpec wrong_level{{{3, {2, 0}, {1, 1}}}};
    EXPECT_THROW(wrong_level.validate(3), ArgumentError);
    ChainSpec twice{{{2, {2, 0}, {1, 1}}, {2, {1, 1}, {2, 0}}}};
    EXPECT_THROW(twice.validate(2), ArgumentError);
    EXPECT_THROW(ChainSpec{}.validate(2), ArgumentError);
}

TEST(Chain, LevelTwoMstd) {
    ChainSpec spec{{{2, {2, 0}, {1, 1}}}};
    const auto chain = build_chain(spec, 2);
    const auto cls = classify(chain.set, SizeRoute::materialize);
    EXPECT_EQ(cls.verdict, Verdict::mstd);
    EXPECT_TRUE(all_passed(verify_chain(chain.set, spec)));
}

TEST(Chain, LevelTwoDifferenceDominant) {
    ChainSpec spec{{{2, {1, 1}, {2, 0}}}};
    const auto chain = build_chain(spec, 2);
    EXPECT_EQ(classify(chain.set).verdict, Verdict::difference_dominant);
}

TEST(Chain, ThreeLevels) {
    ChainSpec spec{{{2, {2, 0}, {1, 1}}, {3, {3, 0}, {2, 1}}}};
    const auto chain = build_chain(spec, 3);
    EXPECT_EQ(chain.components.size(), 2U);
    EXPECT_EQ(chain.m, 3 * chain.components.front().max_corner()[0] + 1);
    const auto reports = verify_chain(chain.set, spec);
    ASSERT_EQ(reports.size(), 2U);
    EXPECT_TRUE(reports[0].passed);
    EXPECT_TRUE(reports[1].passed);
}

TEST(Chain, Generational) {
    const auto one = build_k_generational(1);
    EXPECT_EQ(classify(one.set).verdict, Verdict::mstd);
    EXPECT_THROW(build_k_generational(0), ArgumentError);
    const auto spec = k_generational_spec(2);
    ASSERT_EQ(spec.levels.size(), 2U);
    EXPECT_EQ(spec.levels[1], (ChainLevel{4, {4, 0}, {2, 2}}));
}
