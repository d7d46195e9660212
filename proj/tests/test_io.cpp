#include "mstd/constructions.hpp"
#include "mstd/errors.hpp"
#include "mstd/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace mstd;
using testing_support::to_set;

TEST(Pts, WriteExamples) {
    EXPECT_EQ(write_pts(PointSet::of({0, 2})), "dim 1\n0\n2\n");
    EXPECT_EQ(write_pts(PointSet::of({LatticePoint{1, 0}, LatticePoint{0, 1}})), "dim 2\n0 1\n1 0\n");
    EXPECT_EQ(write_pts(PointSet::of({-3, 5})), "dim 1\n-3\n5\n");
    EXPECT_THROW(write_pts(PointSet::from_points(1, {})), EmptySetError);
}

TEST(Pts, ParseExamples) {
    EXPECT_EQ(parse_pts("dim 1\n0\n"), PointSet::of({0}));
    EXPECT_EQ(parse_pts("# header\n\ndim 2\n# pt\n 3  -4 \n+1 2\r\n"),
              PointSet::of({LatticePoint{3, -4}, LatticePoint{1, 2}}));
    EXPECT_THROW(parse_pts("dim 2\n0 0\n0 0\n"), DuplicateError);
    EXPECT_THROW(parse_pts("dim 2\n0\n"), ParseError);
    EXPECT_THROW(parse_pts("0\n"), ParseError);
    EXPECT_THROW(parse_pts(""), ParseError);
    EXPECT_THROW(parse_pts("dim 0\n"), ParseError);
    EXPECT_THROW(parse_pts("dim 1\nx\n"), ParseError);
    EXPECT_THROW(parse_pts("dim 1\n99999999999999999999\n"), ParseError);
}

TEST(Pts, ErrorLineNumbers) {
    try {
        parse_pts("dim 2\n# c\n1 2\n3\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4U);
    }
    try {
        parse_pts("dim 1\n5\n6\n5\n");
        FAIL();
    } catch (const DuplicateError& e) {
        EXPECT_EQ(e.line(), 4U);
    }
}

TEST(Pts, RoundTripRandom) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const std::size_t dim = 1 + t % 3;
        auto set = oracle::random_set(rng, dim, dim == 1 ? 60 : 9, 0.3);
        if (set.empty()) {
            set.insert(oracle::Point(dim, -7));
        }
        const auto a = to_set(set, dim);
        const auto text = write_pts(a);
        EXPECT_EQ(parse_pts(text), a);
        EXPECT_EQ(text.back(), '\n');
        std::istringstream in(text);
        EXPECT_EQ(parse_pts(in), a);
    }
}

TEST(Pts, RoundTripConstructions) {
    ConstructionParams p;
    p.k = 2;
    p.dims = {40, 40};
    p.spec1 = {2, 0};
    p.spec2 = {1, 1};
    const auto sq = build_2d(p).set;
    EXPECT_EQ(parse_pts(write_pts(sq)), sq);
    p.dims = {40, 40, 40};
    const auto cube = build_ddim(p).set;
    EXPECT_EQ(parse_pts(write_pts(cube)), cube);
    p.dims = {40};
    const auto line = build_1d(p).set;
    EXPECT_EQ(parse_pts(write_pts(line)), line);
}

TEST(Pbm, Examples) {
    EXPECT_EQ(render_pbm(PointSet::of({LatticePoint{0, 0}})), "P1\n1 1\n1\n");
    EXPECT_EQ(render_pbm(PointSet::of({LatticePoint{0, 0}, LatticePoint{1, 1}})), "P1\n2 2\n01\n10\n");
    EXPECT_EQ(render_pbm(PointSet::of({LatticePoint{5, 7}, LatticePoint{5, 9}})), "P1\n1 3\n1\n0\n1\n");
    EXPECT_THROW(render_pbm(PointSet::of({0, 1})), DimensionError);
}

TEST(Pbm, WrapsLongRows) {
    const auto row = PointSet::of({LatticePoint{0, 0}, LatticePoint{149, 0}});
    const auto pbm = render_pbm(row);
    std::istringstream in(pbm);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    EXPECT_EQ(line, "150 1");
    std::string digits;
    while (std::getline(in, line)) {
        EXPECT_LE(line.size(), 70U);
        digits += line;
    }
    ASSERT_EQ(digits.size(), 150U);
    EXPECT_EQ(digits.front(), '1');
    EXPECT_EQ(digits.back(), '1');
    EXPECT_EQ(std::count(digits.begin(), digits.end(), '1'), 2);
}

TEST(Pbm, FringeB1) {
    const auto b1 = fringe_2d(4, Fringe2D::B11);
    const auto pbm = render_pbm(b1);
    EXPECT_EQ(pbm.rfind("P1\n10 10\n", 0), 0U);
    const auto body = pbm.substr(std::string("P1\n10 10\n").size());
    EXPECT_EQ(static_cast<std::size_t>(std::count(body.begin(), body.end(), '1')), b1.size());
}

TEST(ChainSpecText, ParseAndFormat) {
    const auto spec = parse_chain_spec("# levels\n2: 2,0 > 1,1\n\n3 : 3, 0 > 2 ,1\n");
    ASSERT_EQ(spec.levels.size(), 2U);
    EXPECT_EQ(spec.levels[0], (ChainLevel{2, {2, 0}, {1, 1}}));
    EXPECT_EQ(spec.levels[1], (ChainLevel{3, {3, 0}, {2, 1}}));
    EXPECT_EQ(format_chain_spec(spec), "2: 2,0 > 1,1\n3: 3,0 > 2,1\n");
    EXPECT_EQ(parse_chain_spec(format_chain_spec(spec)), spec);
    EXPECT_THROW(parse_chain_spec("2: 2,0 1,1\n"), ParseError);
    EXPECT_THROW(parse_chain_spec("2: 2,1 > 1,1\n"), ParseError);
    EXPECT_THROW(parse_chain_spec("x: 2,0 > 1,1\n"), ParseError);
    EXPECT_THROW(parse_chain_spec("# nothing\n"), ParseError);
}

TEST(Report, Format) {
    const auto r = make_report("2A vs A-A", Comparison::strict, 26, 25);
    EXPECT_EQ(format_report(r), "2A vs A-A\t>\t26\t25\t+1\tPASS\n");
    auto f = make_report("x", Comparison::balance, 3, 5);
    f.details["k"] = 2;
    EXPECT_EQ(format_report(f, true), "x\t=\t3\t5\t-2\tFAIL\n  k\t2\n");
}
