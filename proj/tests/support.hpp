#pragma once

#include "mstd/point_set.hpp"
#include "oracles.hpp"

#include <span>

namespace testing_support {

inline mstd::PointSet to_set(const oracle::Set& s, std::size_t dim) {
    std::vector<mstd::Coord> flat;
    for (const auto& p : s) {
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return mstd::PointSet::from_points(dim, std::move(flat));
}

inline oracle::Set to_oracle(const mstd::PointSet& s) {
    oracle::Set out;
    s.for_each([&](std::span<const mstd::Coord> p) { out.insert(oracle::Point(p.begin(), p.end())); });
    return out;
}

} // namespace testing_support
