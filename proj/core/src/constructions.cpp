#include "mstd/constructions.hpp"

#include "mstd/affine.hpp"
#include "mstd/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace mstd {

namespace {

void require_k(unsigned k) {
    if (k < 2) {
        throw ArgumentError("fringe level k must be at least 2, got " + std::to_string(k));
    }
}

void require_ab(unsigned a, unsigned b) {
    if (a + b == 0) {
        throw ArgumentError("closed form needs a + b >= 1");
    }
}

// Side length minus one of the base fringe cube: 2k+1 for B1, 2k+2 for B2.
Coord fringe_span(unsigned k, int which) { return 2 * static_cast<Coord>(k) + (which == 1 ? 1 : 2); }

// Adds every point of `s`, mapped through x -> sign * x + offset per axis.
void stamp(DenseGrid& g, const PointSet& s, std::span<const Coord> sign, std::span<const Coord> offset) {
    std::vector<Coord> q(s.dimension());
    s.for_each([&](std::span<const Coord> p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] = sign[i] * p[i] + offset[i];
        }
        g.set(q);
    });
}

PointSet shear_if_needed(PointSet set, std::size_t dim, const std::vector<Coord>& slopes) {
    if (std::all_of(slopes.begin(), slopes.end(), [](Coord m) { return m == 0; })) {
        return set;
    }
    return apply_affine(set, IntegerAffineMap::shear(dim, slopes));
}

PointSet reflect(const PointSet& s, std::size_t axis, Coord span) {
    const std::size_t d = s.dimension();
    auto m = IntegerAffineMap::identity(d).matrix();
    std::vector<Coord> offset(d, 0);
    m[axis][axis] = -1;
    offset[axis] = span;
    return apply_affine(s, IntegerAffineMap(std::move(m), std::move(offset)));
}

} // namespace

Coord minimum_side(unsigned k) { return 4 * (2 * static_cast<Coord>(k) * k + 1) + 1; }

Construction normalize_params(const ConstructionParams& params, std::size_t dim) {
    const unsigned k = params.k;
    require_k(k);
    if (k > 1000000) {
        throw ArgumentError("level k is too large");
    }
    if (params.dims.size() != dim) {
        throw ArgumentError("expected " + std::to_string(dim) + " side lengths, got " +
                            std::to_string(params.dims.size()));
    }
    if (params.spec1.level() != k || params.spec2.level() != k) {
        throw ArgumentError("both specs must have level s + d = k = " + std::to_string(k));
    }
    Construction out;
    out.params = params;
    auto& p = out.params;
    if (p.spec1.s < p.spec1.d) {
        p.spec1 = p.spec1.mirrored();
        out.spec1_swapped = true;
    }
    if (p.spec2.s < p.spec2.d) {
        p.spec2 = p.spec2.mirrored();
        out.spec2_swapped = true;
    }
    if (p.spec1 == p.spec2) {
        throw ArgumentError("specs " + params.spec1.to_string() + " and " + params.spec2.to_string() +
                            " coincide up to order");
    }
    const Coord band = 2 * static_cast<Coord>(k) * k + 1;
    out.middle_lo = p.spec1.s > p.spec2.s ? band - p.spec1.d : band - p.spec1.s;

    const std::size_t expected_slopes = dim * (dim - 1) / 2;
    if (!p.slopes.empty() && p.slopes.size() != expected_slopes) {
        throw ArgumentError("expected " + std::to_string(expected_slopes) + " shear slopes, got " +
                            std::to_string(p.slopes.size()));
    }
    if (p.slopes.empty()) {
        p.slopes.assign(expected_slopes, 0);
    }
    for (std::size_t i = 0; i < p.slopes.size(); ++i) {
        if (p.slopes[i] < 0) {
            throw ArgumentError("shear slopes must be non-negative");
        }
    }
    const Coord min_side = minimum_side(k);
    for (std::size_t i = 0; i < dim; ++i) {
        const Coord n = p.dims[i];
        if (!p.force && n < min_side) {
            throw ArgumentError("side " + std::to_string(n) + " must exceed 4(2k^2+1) = " +
                                std::to_string(min_side - 1) + " (use force to override)");
        }
        if (n < 2 * out.middle_lo) {
            throw ArgumentError("side " + std::to_string(n) + " leaves no room for the middle band");
        }
        if (n >= kCoordLimit / (4 * static_cast<Coord>(k))) {
            throw ArgumentError("side " + std::to_string(n) + " would overflow the coordinate bound in kA");
        }
    }
    // Sheared coordinates: x_i + sum_j m_ij x_j must stay far inside the bound.
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        Int128 extent = p.dims[i];
        for (std::size_t j = i + 1; j < dim; ++j) {
            extent += static_cast<Int128>(p.slopes[idx++]) * p.dims[j];
        }
        if (extent * 4 * k >= kCoordLimit) {
            throw ArgumentError("shear slopes would overflow the coordinate bound in kA");
        }
    }
    return out;
}

PointSet fringe_cube(unsigned k, std::size_t dim, int which) {
    require_k(k);
    if (which != 1 && which != 2) {
        throw ArgumentError("fringe cube selector must be 1 or 2");
    }
    if (dim == 0) {
        throw DimensionError("fringe cube needs dimension >= 1");
    }
    const Coord span = fringe_span(k, which);
    DenseGrid g(std::vector<Coord>(dim, 0), std::vector<std::size_t>(dim, static_cast<std::size_t>(span) + 1));
    g.fill(std::vector<Coord>(dim, 0), std::vector<Coord>(dim, span));
    const Coord hole = which == 1 ? 2 : 3;
    const Coord run_lo = static_cast<Coord>(k) + (which == 1 ? 2 : 3);
    const Coord run_hi = 2 * static_cast<Coord>(k) + (which == 1 ? 0 : 1);
    std::vector<Coord> p(dim, 0);
    for (std::size_t axis = 0; axis < dim; ++axis) {
        p[axis] = hole;
        g.reset(p);
        for (Coord x = run_lo; x <= run_hi; ++x) {
            p[axis] = x;
            g.reset(p);
        }
        p[axis] = 0;
    }
    return PointSet::from_grid(std::move(g));
}

PointSet fringe_1d(unsigned k, Fringe1D which) { return fringe_cube(k, 1, which == Fringe1D::L ? 1 : 2); }

namespace {

// Holes shared by both closed forms: one singleton and one run per axis.
struct ClosedFormShape {
    Coord top;
    Coord singleton;
    Coord run_lo;
    Coord run_hi;
};

ClosedFormShape closed_form_shape(unsigned k, unsigned a, unsigned b) {
    const Coord K = k;
    const Coord A = a;
    const Coord B = b;
    return {2 * K * (A + B) + (A + 2 * B), 2 * K * (A + B - 1) + (A + 2 * B + 1),
            K * (2 * A + 2 * B - 1) + (A + 2 * B + 1), 2 * K * (A + B) + (A + 2 * B - 1)};
}

} // namespace

PointSet closed_form_1d(unsigned k, unsigned a, unsigned b) {
    require_k(k);
    require_ab(a, b);
    const auto shape = closed_form_shape(k, a, b);
    DenseGrid g({0}, {static_cast<std::size_t>(shape.top) + 1});
    g.fill({0}, {shape.top});
    g.reset({shape.singleton});
    for (Coord x = shape.run_lo; x <= shape.run_hi; ++x) {
        g.reset({x});
    }
    return PointSet::from_grid(std::move(g));
}

PointSet closed_form_2d(unsigned k, unsigned a, unsigned b) {
    require_k(k);
    require_ab(a, b);
    const auto shape = closed_form_shape(k, a, b);
    const auto side = static_cast<std::size_t>(shape.top) + 1;
    DenseGrid g({0, 0}, {side, side});
    g.fill({0, 0}, {shape.top, shape.top});
    g.reset({shape.singleton, 0});
    g.reset({0, shape.singleton});
    for (Coord x = shape.run_lo; x <= shape.run_hi; ++x) {
        g.reset({x, 0});
        g.reset({0, x});
    }
    return PointSet::from_grid(std::move(g));
}

PointSet fringe_2d(unsigned k, Fringe2D variant) {
    switch (variant) {
    case Fringe2D::B11:
        return fringe_cube(k, 2, 1);
    case Fringe2D::B21:
        return fringe_cube(k, 2, 2);
    case Fringe2D::B12:
        return reflect(fringe_cube(k, 2, 1), 0, fringe_span(k, 1));
    case Fringe2D::B22:
        return reflect(fringe_cube(k, 2, 2), 1, fringe_span(k, 2));
    }
    throw ArgumentError("unknown 2D fringe variant");
}

PointSet fringe_ddim(unsigned k, std::span<const int> corner) {
    require_k(k);
    if (corner.size() < 2) {
        throw ArgumentError("d-dimensional fringe needs a corner vector of length >= 2");
    }
    for (int bit : corner) {
        if (bit != 0 && bit != 1) {
            throw ArgumentError("corner vector entries must be 0 or 1");
        }
    }
    const std::size_t d = corner.size();
    const int which = corner[0] == 1 ? 1 : 2;
    const Coord span = fringe_span(k, which);
    PointSet base = fringe_cube(k, d, which);
    std::vector<Coord> sign(d, 1);
    std::vector<Coord> offset(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        if (corner[j] == 0) {
            sign[j] = -1;
            offset[j] = span;
        }
    }
    DenseGrid g(std::vector<Coord>(d, 0), std::vector<std::size_t>(d, static_cast<std::size_t>(span) + 1));
    stamp(g, base, sign, offset);
    return PointSet::from_grid(std::move(g));
}

Construction build_1d(const ConstructionParams& params) {
    Construction out = normalize_params(params, 1);
    const unsigned k = out.params.k;
    const Coord n = out.params.dims[0];
    const Coord lo = out.middle_lo;
    DenseGrid g({0}, {static_cast<std::size_t>(n) + 1});
    g.fill({lo}, {n - lo});
    const std::vector<Coord> plus{1};
    const std::vector<Coord> minus{-1};
    const std::vector<Coord> zero{0};
    const std::vector<Coord> far{n};
    stamp(g, fringe_1d(k, Fringe1D::L), plus, zero);
    stamp(g, fringe_1d(k, Fringe1D::R), minus, far);
    out.set = PointSet::from_grid(std::move(g));
    return out;
}

Construction build_2d(const ConstructionParams& params) {
    Construction out = normalize_params(params, 2);
    const unsigned k = out.params.k;
    const Coord n1 = out.params.dims[0];
    const Coord n2 = out.params.dims[1];
    const Coord lo = out.middle_lo;
    DenseGrid g({0, 0}, {static_cast<std::size_t>(n1) + 1, static_cast<std::size_t>(n2) + 1});
    g.fill({lo, 0}, {n1 - lo, n2});
    g.fill({0, lo}, {n1, n2 - lo});

    const Coord s1 = fringe_span(k, 1);
    const Coord s2 = fringe_span(k, 2);
    const std::vector<Coord> id{1, 1};
    const std::vector<Coord> flip{-1, -1};
    // B11, then (2k+1, n2) - B12, (n1, 2k+2) - B22 and (n1, n2) - B21.
    stamp(g, fringe_2d(k, Fringe2D::B11), id, std::vector<Coord>{0, 0});
    stamp(g, fringe_2d(k, Fringe2D::B12), flip, std::vector<Coord>{s1, n2});
    stamp(g, fringe_2d(k, Fringe2D::B22), flip, std::vector<Coord>{n1, s2});
    stamp(g, fringe_2d(k, Fringe2D::B21), flip, std::vector<Coord>{n1, n2});

    out.set = shear_if_needed(PointSet::from_grid(std::move(g)), 2, out.params.slopes);
    return out;
}

Construction build_ddim(const ConstructionParams& params) {
    if (params.dims.size() < 2) {
        throw ArgumentError("build_ddim needs dimension >= 2");
    }
    const std::size_t d = params.dims.size();
    Construction out = normalize_params(params, d);
    const unsigned k = out.params.k;
    const auto& n = out.params.dims;
    const Coord lo = out.middle_lo;

    std::vector<std::size_t> extents(d);
    for (std::size_t i = 0; i < d; ++i) {
        extents[i] = static_cast<std::size_t>(n[i]) + 1;
    }
    DenseGrid g(std::vector<Coord>(d, 0), std::move(extents));
    // A point avoids every corner cube iff one of its coordinates lies in
    // the middle band, so the middle is a union of d slabs.
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Coord> from(d, 0);
        std::vector<Coord> to(n.begin(), n.end());
        from[i] = lo;
        to[i] = n[i] - lo;
        g.fill(from, to);
    }

    std::vector<int> corner(d);
    std::vector<Coord> sign(d, 1);
    std::vector<Coord> offset(d);
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        for (std::size_t j = 0; j < d; ++j) {
            corner[j] = static_cast<int>((mask >> j) & 1U);
        }
        const Coord span = fringe_span(k, corner[0] == 1 ? 1 : 2);
        for (std::size_t j = 0; j < d; ++j) {
            offset[j] = corner[j] == 1 ? 0 : n[j] - span;
        }
        stamp(g, fringe_ddim(k, corner), sign, offset);
    }
    out.set = shear_if_needed(PointSet::from_grid(std::move(g)), d, out.params.slopes);
    return out;
}

} // namespace mstd
