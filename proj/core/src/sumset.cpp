#include "mstd/sumset.hpp"

#include "bits.hpp"
#include "mstd/errors.hpp"

#include <algorithm>
#include <optional>

namespace mstd {

std::string SumDiffSpec::to_string() const {
    return std::to_string(s) + "A-" + std::to_string(d) + "A";
}

namespace {

using bits::Word;

void require_same_dimension(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty()) {
        throw EmptySetError("Minkowski sum of an empty set");
    }
    if (a.dimension() != b.dimension()) {
        throw DimensionError("Minkowski sum of sets of different dimensions");
    }
}

// A horizontal run of an operand, with its row already mapped to the row
// numbering of the result grid.
struct Run {
    std::size_t dest_row;
    std::size_t start;
    std::size_t length;
};

// Result-row index of a point's prefix, measured from the operand's min corner.
std::size_t dest_row_of(std::span<const Coord> p, std::span<const Coord> lo, std::span<const std::size_t> strides) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < strides.size(); ++i) {
        r += static_cast<std::size_t>(p[i] - lo[i]) * strides[i];
    }
    return r;
}

struct Profile {
    std::vector<Run> runs;
    std::size_t nonempty_rows = 0;
};

Profile profile(const PointSet& s, std::span<const std::size_t> strides) {
    Profile out;
    const std::size_t d = s.dimension();
    const auto lo = s.min_corner();
    if (const DenseGrid* g = s.dense_grid()) {
        std::vector<std::size_t> prefix(d - 1, 0);
        for (std::size_t r = 0; r < g->rows(); ++r) {
            if (r != 0) {
                for (std::size_t axis = d - 1; axis-- > 0;) {
                    if (++prefix[axis] < g->extents()[axis]) {
                        break;
                    }
                    prefix[axis] = 0;
                }
            }
            const auto row = g->row(r);
            if (bits::none(row)) {
                continue;
            }
            ++out.nonempty_rows;
            std::size_t dest = 0;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                dest += prefix[i] * strides[i];
            }
            bits::for_each_run(row, [&](std::size_t start, std::size_t len) {
                out.runs.push_back({dest, start, len});
            });
        }
        return out;
    }
    const auto flat = s.sparse_flat();
    const Coord base = lo[d - 1];
    for (std::size_t i = 0; i < flat.size(); i += d) {
        const auto p = flat.subspan(i, d);
        const bool same_row = i != 0 && std::equal(p.begin(), p.end() - 1, flat.begin() + static_cast<std::ptrdiff_t>(i - d));
        const auto pos = static_cast<std::size_t>(p[d - 1] - base);
        if (same_row && out.runs.back().start + out.runs.back().length == pos) {
            ++out.runs.back().length;
            continue;
        }
        if (!same_row) {
            ++out.nonempty_rows;
        }
        out.runs.push_back({dest_row_of(p, lo, strides), pos, 1});
    }
    return out;
}

DenseGrid grid_of(const PointSet& s) {
    if (const DenseGrid* g = s.dense_grid()) {
        return *g;
    }
    const auto lo = s.min_corner();
    const auto hi = s.max_corner();
    std::vector<std::size_t> ext(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        ext[i] = static_cast<std::size_t>(hi[i] - lo[i]) + 1;
    }
    DenseGrid g({lo.begin(), lo.end()}, std::move(ext));
    const auto flat = s.sparse_flat();
    for (std::size_t i = 0; i < flat.size(); i += lo.size()) {
        g.set(flat.subspan(i, lo.size()));
    }
    return g;
}

PointSet sum_pairwise(const PointSet& a, const PointSet& b) {
    const std::size_t d = a.dimension();
    const auto fa = a.flat();
    const auto fb = b.flat();
    std::vector<Coord> out;
    out.reserve(a.size() * b.size() * d);
    for (std::size_t i = 0; i < fa.size(); i += d) {
        for (std::size_t j = 0; j < fb.size(); j += d) {
            for (std::size_t k = 0; k < d; ++k) {
                out.push_back(fa[i + k] + fb[j + k]);
            }
        }
    }
    return PointSet::from_points(d, std::move(out));
}

PointSet sum_dense(const PointSet& a, const PointSet& b, std::vector<Coord> origin, std::vector<std::size_t> extents) {
    DenseGrid result(std::move(origin), std::move(extents));
    const auto strides = result.row_strides();

    Profile pa = profile(a, strides);
    Profile pb = profile(b, strides);
    const auto wpr = [](const PointSet& s) {
        return bits::words_for(static_cast<std::size_t>(s.max_corner().back() - s.min_corner().back()) + 1);
    };
    const double cost_grid_a = static_cast<double>(pb.runs.size()) * static_cast<double>(pa.nonempty_rows) * static_cast<double>(wpr(a));
    const double cost_grid_b = static_cast<double>(pa.runs.size()) * static_cast<double>(pb.nonempty_rows) * static_cast<double>(wpr(b));
    const bool grid_is_a = cost_grid_a <= cost_grid_b;
    const PointSet& grid_set = grid_is_a ? a : b;
    std::vector<Run> runs = std::move(grid_is_a ? pb.runs : pa.runs);
    const Profile& grid_profile = grid_is_a ? pa : pb;

    // Nonempty rows of the grid operand, as (source row, destination row).
    const DenseGrid g = grid_of(grid_set);
    std::vector<std::pair<std::size_t, std::size_t>> grows;
    grows.reserve(grid_profile.nonempty_rows);
    {
        const std::size_t d = g.dimension();
        std::vector<std::size_t> prefix(d - 1, 0);
        for (std::size_t r = 0; r < g.rows(); ++r) {
            if (r != 0) {
                for (std::size_t axis = d - 1; axis-- > 0;) {
                    if (++prefix[axis] < g.extents()[axis]) {
                        break;
                    }
                    prefix[axis] = 0;
                }
            }
            if (bits::none(g.row(r))) {
                continue;
            }
            std::size_t dest = 0;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                dest += prefix[i] * strides[i];
            }
            grows.emplace_back(r, dest);
        }
    }

    std::sort(runs.begin(), runs.end(), [](const Run& x, const Run& y) { return x.length < y.length; });
    const std::size_t glen = g.row_length();
    std::vector<Word> smeared;
    std::size_t i = 0;
    while (i < runs.size()) {
        const std::size_t len = runs[i].length;
        std::size_t j = i;
        while (j < runs.size() && runs[j].length == len) {
            ++j;
        }
        const std::size_t sw = bits::words_for(glen + len - 1);
        smeared.assign(grows.size() * sw, 0);
        for (std::size_t k = 0; k < grows.size(); ++k) {
            const auto src = g.row(grows[k].first);
            std::span<Word> dst(smeared.data() + k * sw, sw);
            std::copy(src.begin(), src.end(), dst.begin());
            bits::smear(dst, len);
        }
        for (; i < j; ++i) {
            const Run& run = runs[i];
            for (std::size_t k = 0; k < grows.size(); ++k) {
                bits::or_shifted(result.row(grows[k].second + run.dest_row),
                                 std::span<const Word>(smeared.data() + k * sw, sw), run.start);
            }
        }
    }
    return PointSet::from_grid(std::move(result));
}

} // namespace

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    require_same_dimension(a, b);
    const std::size_t d = a.dimension();
    const auto la = a.min_corner();
    const auto ha = a.max_corner();
    const auto lb = b.min_corner();
    const auto hb = b.max_corner();
    std::vector<Coord> origin(d);
    std::vector<std::size_t> extents(d);
    std::uint64_t volume = 1;
    bool volume_fits = true;
    for (std::size_t i = 0; i < d; ++i) {
        origin[i] = la[i] + lb[i];
        const Coord far = ha[i] + hb[i];
        if (origin[i] <= -kCoordLimit || far >= kCoordLimit) {
            throw ArgumentError("Minkowski sum leaves the 62-bit coordinate bound");
        }
        const auto e = static_cast<std::uint64_t>(far - origin[i]) + 1;
        extents[i] = static_cast<std::size_t>(e);
        if (volume_fits && volume > kMaxDenseCells / e) {
            volume_fits = false;
        }
        if (volume_fits) {
            volume *= e;
        }
    }
    const double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
    if (!volume_fits || volume > kMaxDenseCells || pairs <= static_cast<double>(volume) / 64.0) {
        return sum_pairwise(a, b);
    }
    return sum_dense(a, b, std::move(origin), std::move(extents));
}

PointSet negate(const PointSet& a) {
    if (a.empty()) {
        throw EmptySetError("negation of the empty set");
    }
    const std::size_t d = a.dimension();
    if (const DenseGrid* g = a.dense_grid()) {
        std::vector<Coord> origin(d);
        const auto hi = a.max_corner();
        for (std::size_t i = 0; i < d; ++i) {
            origin[i] = -hi[i];
        }
        DenseGrid out(std::move(origin), {g->extents().begin(), g->extents().end()});
        const std::size_t len = g->row_length();
        const std::size_t rows = g->rows();
        for (std::size_t r = 0; r < rows; ++r) {
            auto dst = out.row(rows - 1 - r);
            bits::for_each_set(g->row(r), [&](std::size_t b) { bits::set(dst, len - 1 - b); });
        }
        return PointSet::from_grid(std::move(out));
    }
    std::vector<Coord> flat(a.sparse_flat().begin(), a.sparse_flat().end());
    for (Coord& c : flat) {
        c = -c;
    }
    return PointSet::from_points(d, std::move(flat));
}

PointSet dilate(const PointSet& a, Coord factor) {
    if (factor < 1) {
        throw ArgumentError("dilation factor must be at least 1");
    }
    if (factor == 1 || a.empty()) {
        return a;
    }
    std::vector<Coord> flat = a.flat();
    for (Coord& c : flat) {
        if (c > (kCoordLimit - 1) / factor || c < -(kCoordLimit - 1) / factor) {
            throw ArgumentError("dilation leaves the 62-bit coordinate bound");
        }
        c *= factor;
    }
    return PointSet::from_points(a.dimension(), std::move(flat));
}

PointSet translate(const PointSet& a, std::span<const Coord> offset) {
    if (a.empty()) {
        return a;
    }
    if (offset.size() != a.dimension()) {
        throw DimensionError("translation vector has the wrong dimension");
    }
    if (const DenseGrid* g = a.dense_grid()) {
        DenseGrid out = *g;
        out.shift_origin(offset);
        return PointSet::from_grid(std::move(out));
    }
    const std::size_t d = a.dimension();
    std::vector<Coord> flat(a.sparse_flat().begin(), a.sparse_flat().end());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        flat[i] += offset[i % d];
        if (flat[i] <= -kCoordLimit || flat[i] >= kCoordLimit) {
            throw ArgumentError("translation leaves the 62-bit coordinate bound");
        }
    }
    return PointSet::from_points(d, std::move(flat));
}

namespace {

std::optional<PointSet> multiple(PointSet base, unsigned k) {
    std::optional<PointSet> acc;
    while (k != 0) {
        if (k & 1U) {
            acc = acc ? minkowski_sum(*acc, base) : base;
        }
        k >>= 1U;
        if (k != 0) {
            base = minkowski_sum(base, base);
        }
    }
    return acc;
}

void check_spec(const PointSet& a, SumDiffSpec spec) {
    if (spec.level() == 0) {
        throw ArgumentError("sA - dA needs s + d >= 1");
    }
    if (a.empty()) {
        throw EmptySetError("iterated sumset of the empty set");
    }
}

} // namespace

PointSet iterated_sumdiff(const PointSet& a, SumDiffSpec spec) {
    check_spec(a, spec);
    auto plus = multiple(a, spec.s);
    auto minus = spec.d != 0 ? multiple(negate(a), spec.d) : std::nullopt;
    if (plus && minus) {
        return minkowski_sum(*plus, *minus);
    }
    return plus ? *plus : *minus;
}

PointSet iterated_sumdiff_naive(const PointSet& a, SumDiffSpec spec) {
    check_spec(a, spec);
    const PointSet neg = negate(a);
    std::optional<PointSet> acc;
    for (unsigned i = 0; i < spec.s; ++i) {
        acc = acc ? minkowski_sum(*acc, a) : a;
    }
    for (unsigned i = 0; i < spec.d; ++i) {
        acc = acc ? minkowski_sum(*acc, neg) : neg;
    }
    return *acc;
}

std::pair<LatticePoint, LatticePoint> bounding_box(const PointSet& a) {
    const auto lo = a.min_corner();
    const auto hi = a.max_corner();
    return {LatticePoint(std::vector<Coord>(lo.begin(), lo.end())),
            LatticePoint(std::vector<Coord>(hi.begin(), hi.end()))};
}

} // namespace mstd
