#pragma once

#include "mstd/point_set.hpp"
#include "mstd/sumset.hpp"

#include <vector>

namespace mstd {

/// Parameters of an explicit generalized MSTD construction.
struct ConstructionParams {
    unsigned k = 0;
    /// Side lengths n_1..n_d; the set lives in [0, n_1] x ... x [0, n_d].
    std::vector<Coord> dims;
    /// Shear slopes m_{i,j}, i < j, in row order. Empty means unsheared.
    std::vector<Coord> slopes;
    SumDiffSpec spec1;
    SumDiffSpec spec2;
    /// Accept sides at or below 4(2k^2+1). The gap is then observed, not guaranteed.
    bool force = false;
};

/// A built set together with the normalized parameters it was built from.
struct Construction {
    PointSet set;
    /// Specs rewritten so that s >= d.
    ConstructionParams params;
    bool spec1_swapped = false;
    bool spec2_swapped = false;
    /// Lower edge of the middle band; the band is [middle_lo, n_i - middle_lo].
    Coord middle_lo = 0;
};

/// Smallest admissible side length, 4(2k^2+1) + 1.
Coord minimum_side(unsigned k);

/// Checks and normalizes parameters for a `dim`-dimensional build.
/// Throws ArgumentError on any violation.
Construction normalize_params(const ConstructionParams& params, std::size_t dim);

enum class Fringe1D { L, R };

/// L = [0,2k+1] \ ({2} u [k+2,2k]),  R = [0,2k+2] \ ({3} u [k+3,2k+1]).
PointSet fringe_1d(unsigned k, Fringe1D which);

/// [0, 2k(a+b)+(a+2b)] minus one singleton and one run; equals aL + bR.
PointSet closed_form_1d(unsigned k, unsigned a, unsigned b);

/// The four oriented 2D fringes. B11 = B1 and B21 = B2 are the base squares
/// with holes on the axes; B12 mirrors B1 in x and B22 mirrors B2 in y.
enum class Fringe2D { B11, B12, B21, B22 };

PointSet fringe_2d(unsigned k, Fringe2D variant);

/// Square closed form equal to aB1 + bB2.
PointSet closed_form_2d(unsigned k, unsigned a, unsigned b);

/// d-dimensional fringe as it sits in the corner selected by `corner`.
/// corner[j] = 1 puts the corner at coordinate 0 on axis j, 0 at the far end.
/// B1 is used when corner[0] = 1, B2 otherwise; axis j is reflected
/// (x -> s - x, s the side of the base cube) exactly when corner[j] = 0.
PointSet fringe_ddim(unsigned k, std::span<const int> corner);

/// Base d-cube fringe B1 (which = 1) or B2 (which = 2), unreflected.
PointSet fringe_cube(unsigned k, std::size_t dim, int which);

/// A = L u [lo, n-lo] u (n - R).
Construction build_1d(const ConstructionParams& params);

/// Square or rectangle from the four placed fringes and the middle cross,
/// sheared by (x, y) -> (x + m y, y) when a slope is given.
Construction build_2d(const ConstructionParams& params);

/// Box minus its 2^d corner cubes, with the oriented fringes placed in the
/// corners, optionally sheared by the upper unitriangular map. Equals
/// build_2d for d = 2.
Construction build_ddim(const ConstructionParams& params);

} // namespace mstd
