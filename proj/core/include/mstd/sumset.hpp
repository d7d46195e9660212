#pragma once

#include "mstd/point_set.hpp"

#include <string>
#include <utility>

namespace mstd {

/// The pair (s, d) selecting sA - dA: s added copies and d subtracted copies.
struct SumDiffSpec {
    unsigned s = 0;
    unsigned d = 0;

    unsigned level() const noexcept { return s + d; }
    /// (d, s); |sA - dA| = |dA - sA| since one is the negation of the other.
    SumDiffSpec mirrored() const noexcept { return {d, s}; }
    std::string to_string() const;

    friend bool operator==(const SumDiffSpec&, const SumDiffSpec&) = default;
};

/// {a + b : a in A, b in B}.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

/// {-a : a in A}.
PointSet negate(const PointSet& a);

/// {c * a : a in A} for c >= 1.
PointSet dilate(const PointSet& a, Coord factor);

/// {a + t : a in A}.
PointSet translate(const PointSet& a, std::span<const Coord> offset);

/// sA - dA by binary doubling: sA is the sum of the doublings 2^i A over the
/// set bits of s, and dA is handled the same way on -A. Needs s + d >= 1.
PointSet iterated_sumdiff(const PointSet& a, SumDiffSpec spec);

/// Reference fold A + A + ... - A - ... with s + d - 1 Minkowski sums.
/// Slower; kept for cross-checking the doubling route.
PointSet iterated_sumdiff_naive(const PointSet& a, SumDiffSpec spec);

/// Componentwise (min, max) corners.
std::pair<LatticePoint, LatticePoint> bounding_box(const PointSet& a);

} // namespace mstd
